#include "bmcif/ilp.hpp"

#include <algorithm>
#include <optional>

namespace bmcif {

namespace {

using boost::multiprecision::cpp_int;

cpp_int floor_div(const cpp_int& a, const cpp_int& b) {
  cpp_int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

cpp_int rational_floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

cpp_int rational_ceil(const Rational& r) { return -rational_floor(-r); }

struct SimplexVar {
  Rational lower;
  std::optional<Rational> upper;  // nullopt = unbounded above
  Rational cost;
  bool at_upper = false;  // meaningful while nonbasic
};

struct Simplex {
  std::vector<std::vector<Rational>> a;  // m x n, basis columns = identity
  std::vector<Rational> rhs;
  std::vector<int> basis;  // variable per row
  std::vector<SimplexVar> vars;
  std::vector<char> is_basic;

  int rows() const { return static_cast<int>(a.size()); }
  int cols() const { return static_cast<int>(vars.size()); }

  Rational nonbasic_value(int j) const {
    return vars[j].at_upper ? *vars[j].upper : vars[j].lower;
  }

  std::vector<Rational> basic_values() const {
    std::vector<Rational> beta = rhs;
    for (int j = 0; j < cols(); ++j) {
      if (is_basic[j]) continue;
      Rational v = nonbasic_value(j);
      if (v == 0) continue;
      for (int i = 0; i < rows(); ++i) {
        if (a[i][j] != 0) beta[i] -= a[i][j] * v;
      }
    }
    return beta;
  }

  void pivot(int row, int col) {
    Rational p = a[row][col];
    for (Rational& x : a[row]) x /= p;
    rhs[row] /= p;
    for (int i = 0; i < rows(); ++i) {
      if (i == row) continue;
      Rational f = a[i][col];
      if (f == 0) continue;
      for (int j = 0; j < cols(); ++j) {
        if (a[row][j] != 0) a[i][j] -= f * a[row][j];
      }
      rhs[i] -= f * rhs[row];
    }
    is_basic[basis[row]] = 0;
    basis[row] = col;
    is_basic[col] = 1;
  }

  SolveStatus optimize() {
    for (;;) {
      // Entering variable: Bland's rule over improving reduced costs.
      int enter = -1;
      int dir = 0;
      for (int j = 0; j < cols(); ++j) {
        if (is_basic[j]) continue;
        Rational z = vars[j].cost;
        for (int i = 0; i < rows(); ++i) {
          if (a[i][j] != 0) z -= vars[basis[i]].cost * a[i][j];
        }
        bool improving = vars[j].at_upper ? z > 0 : z < 0;
        if (improving) {
          enter = j;
          dir = vars[j].at_upper ? -1 : +1;
          break;
        }
      }
      if (enter < 0) return SolveStatus::optimal;

      // Ratio test: movement t >= 0 of the entering variable, limited by
      // its opposite bound and by every basic variable hitting a bound.
      std::vector<Rational> beta = basic_values();
      std::optional<Rational> best_t;
      int leave_row = -1;       // -1 = bound flip of the entering variable
      bool leave_to_upper = false;
      int leave_var = enter;
      if (vars[enter].upper) {
        best_t = *vars[enter].upper - vars[enter].lower;
      }
      for (int i = 0; i < rows(); ++i) {
        Rational coef = a[i][enter] * dir;  // beta_i changes by -coef * t
        Rational t;
        bool to_upper;
        if (coef > 0) {
          t = (beta[i] - vars[basis[i]].lower) / coef;
          to_upper = false;
        } else if (coef < 0 && vars[basis[i]].upper) {
          t = (*vars[basis[i]].upper - beta[i]) / -coef;
          to_upper = true;
        } else {
          continue;
        }
        bool better = !best_t || t < *best_t ||
                      (t == *best_t && basis[i] < leave_var);
        if (better) {
          best_t = t;
          leave_row = i;
          leave_to_upper = to_upper;
          leave_var = basis[i];
        }
      }
      if (!best_t) return SolveStatus::unbounded;
      if (leave_row < 0) {
        vars[enter].at_upper = !vars[enter].at_upper;
        continue;
      }
      vars[leave_var].at_upper = leave_to_upper;
      pivot(leave_row, enter);
    }
  }
};

/// Builds the phase-1 tableau: slacks for inequalities, artificials where
/// the all-lower-bounds start violates a row.
struct Prepared {
  Simplex simplex;
  int structural = 0;
  std::vector<int> artificials;
};

std::optional<Prepared> prepare(const LinearModel& model) {
  Prepared prep;
  Simplex& s = prep.simplex;
  int n = static_cast<int>(model.variables.size());
  int m = static_cast<int>(model.constraints.size());
  prep.structural = n;

  for (const ModelVariable& v : model.variables) {
    if (v.lower > v.upper) return std::nullopt;
    s.vars.push_back({Rational(v.lower), Rational(v.upper), 0, false});
  }
  s.a.assign(m, {});
  s.rhs.assign(m, 0);
  s.basis.assign(m, -1);

  for (int i = 0; i < m; ++i) {
    const ModelConstraint& row = model.constraints[i];
    Rational residual = row.rhs;  // rhs - a . x at the all-lower start
    for (int j = 0; j < n; ++j) {
      residual -= Rational(row.coeffs[j]) * s.vars[j].lower;
    }
    int slack = -1;
    i64 slack_sign = 0;
    if (row.relation != Relation::equal) {
      slack_sign = row.relation == Relation::less_equal ? 1 : -1;
      slack = static_cast<int>(s.vars.size());
      s.vars.push_back({0, std::nullopt, 0, false});
    }
    Rational slack_value = residual * slack_sign;  // 0 for equalities
    bool need_artificial =
        row.relation == Relation::equal ? residual != 0 : slack_value < 0;

    for (int i2 = 0; i2 < m; ++i2) {
      s.a[i2].resize(s.vars.size(), 0);
    }
    for (int j = 0; j < n; ++j) s.a[i][j] = Rational(row.coeffs[j]);
    if (slack >= 0) s.a[i][slack] = slack_sign;
    s.rhs[i] = row.rhs;

    if (!need_artificial) {
      s.basis[i] = slack >= 0 ? slack : -1;
      if (s.basis[i] < 0) {
        // Equality satisfied exactly at the start; still give the row a
        // basic variable via a zero-valued artificial.
        need_artificial = true;
      }
    }
    if (need_artificial) {
      int art = static_cast<int>(s.vars.size());
      s.vars.push_back({0, std::nullopt, 0, false});
      for (int i2 = 0; i2 < m; ++i2) s.a[i2].resize(s.vars.size(), 0);
      s.a[i][art] = residual < 0 ? -1 : 1;
      s.basis[i] = art;
      prep.artificials.push_back(art);
    }
  }

  s.is_basic.assign(s.vars.size(), 0);
  for (int i = 0; i < m; ++i) {
    s.is_basic[s.basis[i]] = 1;
    // Normalize so basis columns are identity.
    if (s.a[i][s.basis[i]] != 1) {
      Rational p = s.a[i][s.basis[i]];
      for (Rational& x : s.a[i]) x /= p;
      s.rhs[i] /= p;
    }
  }
  return prep;
}

}  // namespace

LpResult solve_lp(const LinearModel& model) {
  LpResult result;
  std::optional<Prepared> prep = prepare(model);
  if (!prep) return result;  // conflicting bounds
  Simplex& s = prep->simplex;

  if (!prep->artificials.empty()) {
    for (int art : prep->artificials) s.vars[art].cost = 1;
    SolveStatus st = s.optimize();
    if (st != SolveStatus::optimal) {
      result.status = st;
      return result;
    }
    std::vector<Rational> beta = s.basic_values();
    Rational infeasibility = 0;
    for (int i = 0; i < s.rows(); ++i) {
      if (std::find(prep->artificials.begin(), prep->artificials.end(),
                    s.basis[i]) != prep->artificials.end()) {
        infeasibility += beta[i];
      }
    }
    for (int art : prep->artificials) {
      if (!s.is_basic[art] && s.vars[art].at_upper) {
        infeasibility += s.nonbasic_value(art);
      }
    }
    if (infeasibility != 0) return result;  // status stays infeasible
    for (int art : prep->artificials) {
      s.vars[art].cost = 0;
      s.vars[art].upper = 0;  // pin to zero for phase 2
    }
  }

  for (int j = 0; j < prep->structural; ++j) {
    s.vars[j].cost = model.variables[j].objective;
  }
  SolveStatus st = s.optimize();
  if (st != SolveStatus::optimal) {
    result.status = st;
    return result;
  }

  std::vector<Rational> beta = s.basic_values();
  std::vector<Rational> values(s.cols());
  for (int j = 0; j < s.cols(); ++j) {
    if (!s.is_basic[j]) values[j] = s.nonbasic_value(j);
  }
  for (int i = 0; i < s.rows(); ++i) values[s.basis[i]] = beta[i];

  result.status = SolveStatus::optimal;
  result.values.assign(values.begin(), values.begin() + prep->structural);
  result.objective = 0;
  for (int j = 0; j < prep->structural; ++j) {
    result.objective += Rational(model.variables[j].objective) * values[j];
  }
  return result;
}

namespace {

struct BranchAndBound {
  const LinearModel& base;
  std::optional<SolveResult> best;

  void search(LinearModel node) {
    LpResult lp = solve_lp(node);
    if (lp.status != SolveStatus::optimal) return;
    cpp_int bound = rational_ceil(lp.objective);
    if (best && bound >= cpp_int(best->objective)) return;

    int branch = -1;
    Rational best_frac = 0;
    for (size_t j = 0; j < lp.values.size(); ++j) {
      Rational frac = lp.values[j] - Rational(rational_floor(lp.values[j]));
      if (frac > best_frac) {
        best_frac = frac;
        branch = static_cast<int>(j);
      }
    }
    if (branch < 0) {
      SolveResult sol;
      sol.status = SolveStatus::optimal;
      for (const Rational& v : lp.values) {
        sol.assignment.push_back(static_cast<i64>(rational_floor(v)));
      }
      sol.objective = static_cast<i64>(bound);
      best = std::move(sol);
      return;
    }

    i64 split = static_cast<i64>(rational_floor(lp.values[branch]));
    LinearModel down = node;
    down.variables[branch].upper = split;
    search(std::move(down));
    LinearModel up = std::move(node);
    up.variables[branch].lower = split + 1;
    search(std::move(up));
  }
};

}  // namespace

SolveResult solve_ilp(const LinearModel& model) {
  BranchAndBound bb{model, std::nullopt};
  bb.search(model);
  if (bb.best) return *bb.best;
  SolveResult result;
  result.status = SolveStatus::infeasible;
  return result;
}

}  // namespace bmcif
