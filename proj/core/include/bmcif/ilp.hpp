#ifndef BMCIF_ILP_HPP
#define BMCIF_ILP_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bmcif/model.hpp"

namespace bmcif {

using Rational = boost::multiprecision::cpp_rational;

enum class Relation { less_equal, equal, greater_equal };

struct ModelVariable {
  i64 lower = 0;
  i64 upper = 0;
  i64 objective = 0;
};

struct ModelConstraint {
  std::vector<i64> coeffs;  // one per variable
  Relation relation = Relation::less_equal;
  i64 rhs = 0;
};

/// Minimization ILP with finite bounds on every variable.
struct LinearModel {
  std::vector<ModelVariable> variables;
  std::vector<ModelConstraint> constraints;
};

enum class SolveStatus { optimal, infeasible, unbounded };

struct LpResult {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<Rational> values;
  Rational objective;
};

/// Optimal basic solution of the continuous relaxation, in exact rational
/// arithmetic (bounded-variable simplex, Bland's rule, two phases).
/// Unbounded cannot occur for boxed models but is reported defensively.
LpResult solve_lp(const LinearModel& model);

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::vector<i64> assignment;
  i64 objective = 0;
};

/// Exact integer optimum by depth-first branch and bound on the most
/// fractional variable, pruning with the ceiling of the LP bound.
SolveResult solve_ilp(const LinearModel& model);

}  // namespace bmcif

#endif  // BMCIF_ILP_HPP
