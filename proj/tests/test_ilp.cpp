#include "doctest.h"

#include <optional>
#include <random>

#include "bmcif/ilp.hpp"

using namespace bmcif;

namespace {

/// Exhaustive reference for tiny boxed ILPs.
std::optional<i64> enumerate_best(const LinearModel& model) {
  int n = static_cast<int>(model.variables.size());
  std::vector<i64> x(n);
  std::optional<i64> best;
  auto feasible = [&]() {
    for (const ModelConstraint& row : model.constraints) {
      i64 lhs = 0;
      for (int j = 0; j < n; ++j) lhs += row.coeffs[j] * x[j];
      bool ok = row.relation == Relation::less_equal      ? lhs <= row.rhs
                : row.relation == Relation::greater_equal ? lhs >= row.rhs
                                                          : lhs == row.rhs;
      if (!ok) return false;
    }
    return true;
  };
  auto recurse = [&](auto&& self, int j) -> void {
    if (j == n) {
      if (!feasible()) return;
      i64 value = 0;
      for (int k = 0; k < n; ++k) value += model.variables[k].objective * x[k];
      if (!best || value < *best) best = value;
      return;
    }
    for (i64 v = model.variables[j].lower; v <= model.variables[j].upper; ++v) {
      x[j] = v;
      self(self, j + 1);
    }
  };
  recurse(recurse, 0);
  return best;
}

}  // namespace

TEST_SUITE("ilp") {

TEST_CASE("continuous relaxation basics") {
  SUBCASE("simple bound-constrained minimum") {
    LinearModel m;
    m.variables = {{0, 5, 1}};
    m.constraints = {{{1}, Relation::greater_equal, 2}};
    LpResult lp = solve_lp(m);
    REQUIRE(lp.status == SolveStatus::optimal);
    CHECK(lp.values[0] == 2);
    CHECK(lp.objective == 2);
  }
  SUBCASE("infeasible box") {
    LinearModel m;
    m.variables = {{0, 1, 1}, {0, 1, 1}};
    m.constraints = {{{1, 1}, Relation::greater_equal, 3}};
    CHECK(solve_lp(m).status == SolveStatus::infeasible);
  }
  SUBCASE("fractional optimum") {
    // min y subject to 6 - 2y <= 5, i.e. -2y <= -1, with y in [0,2].
    LinearModel m;
    m.variables = {{0, 2, 1}};
    m.constraints = {{{-2}, Relation::less_equal, -1}};
    LpResult lp = solve_lp(m);
    REQUIRE(lp.status == SolveStatus::optimal);
    CHECK(lp.objective == Rational(1, 2));
  }
}

TEST_CASE("integer solve on the hand examples") {
  SUBCASE("rounding up the epsilon row") {
    LinearModel m;
    m.variables = {{0, 2, 1}};
    m.constraints = {{{-2}, Relation::less_equal, -1}};
    SolveResult sol = solve_ilp(m);
    REQUIRE(sol.status == SolveStatus::optimal);
    CHECK(sol.assignment == std::vector<i64>{1});
    CHECK(sol.objective == 1);
  }
  SUBCASE("tight epsilon is infeasible") {
    LinearModel m;
    m.variables = {{0, 2, 1}};
    m.constraints = {{{-2}, Relation::less_equal, -5}};
    CHECK(solve_ilp(m).status == SolveStatus::infeasible);
  }
  SUBCASE("all-zero objective") {
    LinearModel m;
    m.variables = {{-3, 3, 0}, {-3, 3, 0}};
    m.constraints = {{{1, 1}, Relation::equal, 1}};
    SolveResult sol = solve_ilp(m);
    REQUIRE(sol.status == SolveStatus::optimal);
    CHECK(sol.objective == 0);
    CHECK(sol.assignment[0] + sol.assignment[1] == 1);
  }
}

TEST_CASE("random boxed models match exhaustive enumeration") {
  std::mt19937_64 rng(424242);
  auto draw = [&](i64 lo, i64 hi) {
    return std::uniform_int_distribution<i64>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 100; ++trial) {
    LinearModel m;
    int n = static_cast<int>(draw(1, 4));
    int rows = static_cast<int>(draw(0, 4));
    for (int j = 0; j < n; ++j) {
      i64 lo = draw(-3, 2);
      m.variables.push_back({lo, lo + draw(0, 4), draw(-5, 5)});
    }
    for (int i = 0; i < rows; ++i) {
      ModelConstraint row;
      for (int j = 0; j < n; ++j) row.coeffs.push_back(draw(-5, 5));
      row.relation = static_cast<Relation>(draw(0, 2));
      row.rhs = draw(-6, 6);
      m.constraints.push_back(std::move(row));
    }
    CAPTURE(trial);
    std::optional<i64> expected = enumerate_best(m);
    SolveResult sol = solve_ilp(m);
    if (expected) {
      REQUIRE(sol.status == SolveStatus::optimal);
      CHECK(sol.objective == *expected);
      // The relaxation bounds the integer optimum from below.
      LpResult lp = solve_lp(m);
      REQUIRE(lp.status == SolveStatus::optimal);
      CHECK(lp.objective <= Rational(*expected));
      // The reported assignment is feasible and attains the objective.
      i64 value = 0;
      for (int j = 0; j < n; ++j) {
        CHECK(sol.assignment[j] >= m.variables[j].lower);
        CHECK(sol.assignment[j] <= m.variables[j].upper);
        value += m.variables[j].objective * sol.assignment[j];
      }
      CHECK(value == sol.objective);
    } else {
      CHECK(sol.status == SolveStatus::infeasible);
    }
  }
}

}  // TEST_SUITE
