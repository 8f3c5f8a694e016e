#ifndef BMCIF_GENERATORS_HPP
#define BMCIF_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "bmcif/model.hpp"

namespace bmcif {

struct RandomConfig {
  int node_count = 0;
  int arc_count = 0;
  int supply_nodes = 2;
  int sink_nodes = 2;
  i64 max_cost = 10;
  i64 max_capacity = 50;
  i64 total_supply = 50;
  std::uint64_t seed = 0;
};

/// Chain gadget encoding a subset-sum instance: per item a zero-cost and a
/// (w_i, -w_i)-cost unit-capacity parallel arc, one unit shipped end to end.
/// Distinct flow costs are exactly the subset sums of `weights`.
Instance gen_subset_sum(const std::vector<i64>& weights);

/// Chain with zero-cost back arcs of capacity M plus one (1,-1)-cost arc
/// (k, k-2) of capacity L. Has (M+1)^(k-3) * (L+1) supported efficient flows
/// but only L+1 supported nondominated vectors. Requires k >= 5 and M > L.
Instance gen_example_path_cycles(int k, i64 m_param, i64 l_param);

/// Chain of capacity L+2 plus (1,-1)-cost arcs (k, k-i) of capacity L for
/// i in {2,...,k-1}. Has sum_{i=0..L} binom((k-2)+i-1, i) supported efficient
/// flows and L+1 supported nondominated vectors. Requires k >= 5.
Instance gen_example_backarcs(int k, i64 l_param);

/// Random connected instance in the style of the NETGEN parameter set:
/// uniform costs in [1, max_cost], capacities in [1, max_capacity], supplies
/// summing to total_supply. Deterministic per seed, always feasible.
Instance gen_random(const RandomConfig& cfg);

}  // namespace bmcif

#endif  // BMCIF_GENERATORS_HPP
