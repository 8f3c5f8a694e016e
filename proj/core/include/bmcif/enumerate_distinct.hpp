#ifndef BMCIF_ENUMERATE_DISTINCT_HPP
#define BMCIF_ENUMERATE_DISTINCT_HPP

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "bmcif/frontier.hpp"
#include "bmcif/mcf.hpp"
#include "bmcif/model.hpp"

namespace bmcif {

/// All-pairs shortest residual distances under the first-objective reduced
/// costs, with path recovery. Distances are nonnegative when the base flow
/// is first-objective optimal.
struct DistanceTable {
  std::vector<std::vector<i64>> dist;  // [from][to], 1-based nodes; INF when
                                       // unreachable
  std::vector<std::vector<int>> via;   // residual arc starting the best path
  std::vector<ResidualArc> residual;   // arcs referenced by `via`, with
                                       // reduced costs in cost1
  static constexpr i64 INF = std::numeric_limits<i64>::max() / 4;
};

DistanceTable distance_table(const Instance& net, const Flow& flow,
                             const ScalarCost& cost);

/// One step of the adjusted method: from a cost-minimal flow, apply the
/// proper residual cycle with minimal strictly positive first-objective
/// cost. Guarantees that no feasible flow of `net` has a first-objective
/// value strictly between input and output. Returns nothing when all flows
/// share the input's value.
std::optional<Flow> second_distinct_cost_flow(const Instance& net,
                                              const Flow& optimal,
                                              const ScalarCost& cost);

/// One re-optimize/step pair recorded during the sweep, for auditing the
/// no-intermediate-value guarantee against brute force.
struct AdjustedStep {
  Instance network;  // face-reduced network with the node's bound overrides
  Flow from;
  Flow to;
};

struct AdjustedResult {
  /// Supported nondominated vectors with one witness flow each, sorted by
  /// increasing first objective.
  std::vector<std::pair<BiCost, Flow>> vectors;
  std::vector<i64> leaves_per_face;
  i64 partition_nodes = 0;
  std::vector<AdjustedStep> steps;
};

AdjustedResult all_supported_vectors_adjusted(const Instance& inst);

}  // namespace bmcif

#endif  // BMCIF_ENUMERATE_DISTINCT_HPP
