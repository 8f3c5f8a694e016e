#ifndef BMCIF_ENUMERATE_AOF_HPP
#define BMCIF_ENUMERATE_AOF_HPP

#include <optional>
#include <vector>

#include "bmcif/frontier.hpp"
#include "bmcif/mcf.hpp"
#include "bmcif/model.hpp"

namespace bmcif {

/// A proper residual cycle (one that never uses both residual copies of the
/// same arc) at the given flow, or nothing if the flow is the only feasible
/// one. Capacity overrides are expressed by tightening the instance bounds
/// before the call.
std::optional<Cycle> find_proper_cycle(const Instance& net, const Flow& flow);

/// Every feasible flow of `net` exactly once, by binary partition: push one
/// unit around a proper cycle, split on an arc where the two flows differ,
/// recurse on both halves. `seed` must be feasible.
std::vector<Flow> enumerate_flows_by_partition(const Instance& net,
                                               const Flow& seed);

/// All supported efficient flows of the instance: enumerate each maximally
/// nondominated face's reduced network, lift, and deduplicate globally.
/// Results are sorted by flow vector.
std::vector<Flow> all_supported_flows(const Instance& inst);

}  // namespace bmcif

#endif  // BMCIF_ENUMERATE_AOF_HPP
