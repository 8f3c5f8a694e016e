#ifndef BMCIF_MCF_HPP
#define BMCIF_MCF_HPP

#include <optional>
#include <vector>

#include "bmcif/model.hpp"

namespace bmcif {

/// One integer cost per arc; either a single objective row or an integer
/// weighted combination of the two rows.
using ScalarCost = std::vector<i64>;

ScalarCost cost_row1(const Instance& inst);
ScalarCost cost_row2(const Instance& inst);
ScalarCost weighted_cost(const Instance& inst, i64 lambda1, i64 lambda2);

class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotOptimalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A basic feasible flow: spanning forest T plus non-tree arcs pinned to
/// their lower (L) or upper (U) bound.
struct TreeFlow {
  Flow flow;
  std::vector<int> tree_arcs;
  std::vector<int> lower_set;
  std::vector<int> upper_set;
};

struct Potentials {
  std::vector<i64> value;  // size node_count, index = node id - 1
};

struct ResidualArc {
  int from = 0;
  int to = 0;
  int arc = -1;       // original arc index
  bool forward = true;  // A+ copy if true, A- copy otherwise
  i64 capacity = 0;
  i64 cost1 = 0;  // residual costs (negated for backward copies)
  i64 cost2 = 0;
};

struct ResidualGraph {
  std::vector<ResidualArc> arcs;
};

/// Oriented residual cycle: signed incidence per original arc, bi-objective
/// cost and the number of units that can be pushed around it.
struct Cycle {
  std::vector<i64> chi;  // one entry in {-1,0,+1} per original arc
  BiCost cost;
  i64 max_step = 0;
};

/// Cost-minimal integer flow with a certifying tree structure, via
/// successive shortest paths followed by tree extraction.
TreeFlow solve_scalar_mcf(const Instance& inst, const ScalarCost& cost);

/// Flow minimizing `first`, and among those `second` (restricts to the
/// zero-reduced-cost subnetwork of stage one).
TreeFlow lexmin_flow(const Instance& inst, const ScalarCost& first,
                     const ScalarCost& second);

/// Shortest residual distances from node 1 under `cost`; requires the flow
/// to be optimal for `cost` (throws NotOptimalError on a negative residual
/// cycle). Unreachable nodes get the artificial-arc distance 1 + sum|cost|.
Potentials node_potentials(const Instance& inst, const Flow& flow,
                           const ScalarCost& cost);

std::vector<i64> reduced_costs(const Instance& inst, const Potentials& pot,
                               const ScalarCost& cost);

/// True iff the residual graph has no negative-cost cycle under `cost`.
bool check_optimal(const Instance& inst, const Flow& flow,
                   const ScalarCost& cost);

ResidualGraph residual(const Instance& inst, const Flow& flow);

/// The unique cycle formed by non-tree arc `arc_index` and the tree path
/// between its endpoints, oriented so that one unit is residual-feasible.
Cycle induced_cycle(const Instance& inst, const TreeFlow& tf, int arc_index);

Flow apply_cycle(const Instance& inst, const Flow& flow, const Cycle& cyc,
                 i64 theta);

/// Theorem-of-composition coefficients: per non-tree arc the signed number
/// of times its induced cycle occurs in `other - tf.flow`. Entries for tree
/// arcs are zero. Verifies the reconstruction exactly.
std::vector<i64> decompose_difference(const Instance& inst, const TreeFlow& tf,
                                      const Flow& other);

/// Turns an optimal flow into an optimal tree solution by cancelling cycles
/// of free arcs (zero-cost at optimality) and completing a spanning forest
/// with arcs at their bounds. Throws NotOptimalError if a free-arc cycle
/// with nonzero cost shows up.
TreeFlow extract_tree(const Instance& inst, Flow flow, const ScalarCost& cost);

}  // namespace bmcif

#endif  // BMCIF_MCF_HPP
