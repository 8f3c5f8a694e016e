#include "bmcif/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bmcif {

Instance gen_subset_sum(const std::vector<i64>& weights) {
  if (weights.empty()) throw std::invalid_argument("weights must be non-empty");
  int n = static_cast<int>(weights.size());
  Instance inst;
  inst.node_count = n + 1;
  inst.balances.assign(n + 1, 0);
  // Supply at node 1 so that the unit flow follows the arc directions of the
  // chain (the prose swaps b_s and b_t; the arcs force supply at s).
  inst.balances[0] = 1;
  inst.balances[n] = -1;
  for (int i = 0; i < n; ++i) {
    inst.arcs.push_back({i + 1, i + 2, 0, 1, 0, 0});
    inst.arcs.push_back({i + 1, i + 2, 0, 1, weights[i], -weights[i]});
  }
  return inst;
}

Instance gen_example_path_cycles(int k, i64 m_param, i64 l_param) {
  if (k < 5) throw std::invalid_argument("path-cycles family requires k >= 5");
  if (m_param <= l_param) {
    throw std::invalid_argument("path-cycles family requires M > L");
  }
  Instance inst;
  inst.node_count = k;
  inst.balances.assign(k, 0);
  inst.balances[0] = 2;
  inst.balances[k - 1] = -2;
  i64 chain_cap = static_cast<i64>(k - 3) * m_param + (l_param + 2);
  for (int i = 1; i < k; ++i) {
    inst.arcs.push_back({i, i + 1, 0, chain_cap, 0, 0});
  }
  for (int i = 1; i <= k - 3; ++i) {
    inst.arcs.push_back({k - i, k - i - 2, 0, m_param, 0, 0});
  }
  inst.arcs.push_back({k, k - 2, 0, l_param, 1, -1});
  return inst;
}

Instance gen_example_backarcs(int k, i64 l_param) {
  if (k < 5) throw std::invalid_argument("backarcs family requires k >= 5");
  Instance inst;
  inst.node_count = k;
  inst.balances.assign(k, 0);
  inst.balances[0] = 2;
  inst.balances[k - 1] = -2;
  for (int i = 1; i < k; ++i) {
    inst.arcs.push_back({i, i + 1, 0, l_param + 2, 0, 0});
  }
  for (int i = 2; i <= k - 1; ++i) {
    inst.arcs.push_back({k, k - i, 0, l_param, 1, -1});
  }
  return inst;
}

namespace {

i64 uniform(std::mt19937_64& rng, i64 lo, i64 hi) {
  return std::uniform_int_distribution<i64>(lo, hi)(rng);
}

}  // namespace

Instance gen_random(const RandomConfig& cfg) {
  if (cfg.node_count <= 0 || cfg.arc_count <= 0) {
    throw std::invalid_argument("node and arc counts must be positive");
  }
  if (cfg.arc_count < cfg.node_count - 1) {
    throw std::invalid_argument("cannot connect: arc count below node count - 1");
  }
  if (cfg.supply_nodes < 1 || cfg.sink_nodes < 1 ||
      cfg.supply_nodes + cfg.sink_nodes > cfg.node_count) {
    throw std::invalid_argument("invalid supply/sink node counts");
  }
  if (cfg.total_supply < cfg.supply_nodes) {
    throw std::invalid_argument("total supply below supply node count");
  }

  std::mt19937_64 rng(cfg.seed);
  int n = cfg.node_count;
  Instance inst;
  inst.node_count = n;
  inst.balances.assign(n, 0);

  // Supply and sink nodes, then a random split of the total supply.
  std::vector<int> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 1);
  std::shuffle(nodes.begin(), nodes.end(), rng);
  std::vector<int> supplies(nodes.begin(), nodes.begin() + cfg.supply_nodes);
  std::vector<int> sinks(nodes.begin() + cfg.supply_nodes,
                         nodes.begin() + cfg.supply_nodes + cfg.sink_nodes);

  auto split = [&](const std::vector<int>& targets, i64 total, i64 sign) {
    i64 remaining = total;
    for (size_t i = 0; i < targets.size(); ++i) {
      i64 left = static_cast<i64>(targets.size() - 1 - i);
      i64 amount = (i + 1 == targets.size())
                       ? remaining
                       : uniform(rng, 1, remaining - left);
      inst.balances[targets[i] - 1] = sign * amount;
      remaining -= amount;
    }
  };
  split(supplies, cfg.total_supply, +1);
  split(sinks, cfg.total_supply, -1);

  // Random spanning tree. Tree arcs are oriented along the flow that routes
  // the balances through the tree, which keeps the instance feasible.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  struct TreeEdge {
    int a, b;  // attached node, earlier node
  };
  std::vector<TreeEdge> tree;
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (nbr, edge idx)
  for (int i = 1; i < n; ++i) {
    int parent = order[uniform(rng, 0, i - 1) ];
    tree.push_back({order[i], parent});
    adj[order[i]].push_back({parent, i - 1});
    adj[parent].push_back({order[i], i - 1});
  }

  // Net flow over each tree edge: push subtree imbalances toward the root.
  std::vector<i64> edge_flow(tree.size(), 0);  // positive means a -> b
  {
    std::vector<i64> subtree(n + 1, 0);
    std::vector<int> parent_edge(n + 1, -1), visit_order;
    std::vector<char> seen(n + 1, 0);
    std::vector<int> stack{order[0]};
    seen[order[0]] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      visit_order.push_back(v);
      for (auto [w, e] : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          parent_edge[w] = e;
          stack.push_back(w);
        }
      }
    }
    for (int v = 1; v <= n; ++v) subtree[v] = inst.balances[v - 1];
    for (auto it = visit_order.rbegin(); it != visit_order.rend(); ++it) {
      int v = *it;
      int e = parent_edge[v];
      if (e < 0) continue;
      int other = tree[e].a == v ? tree[e].b : tree[e].a;
      // subtree[v] units leave the subtree of v toward `other`.
      edge_flow[e] += (tree[e].a == v ? subtree[v] : -subtree[v]);
      subtree[other] += subtree[v];
    }
  }

  auto draw_costs = [&](Arc& arc) {
    arc.cost1 = uniform(rng, 1, cfg.max_cost);
    arc.cost2 = uniform(rng, 1, cfg.max_cost);
  };

  for (size_t e = 0; e < tree.size(); ++e) {
    Arc arc;
    i64 f = edge_flow[e];
    if (f >= 0) {
      arc.src = tree[e].a;
      arc.dst = tree[e].b;
    } else {
      arc.src = tree[e].b;
      arc.dst = tree[e].a;
      f = -f;
    }
    arc.lower = 0;
    arc.upper = std::max(uniform(rng, 1, cfg.max_capacity), f);
    draw_costs(arc);
    inst.arcs.push_back(arc);
  }
  for (int e = n - 1; e < cfg.arc_count; ++e) {
    Arc arc;
    arc.src = static_cast<int>(uniform(rng, 1, n));
    do {
      arc.dst = static_cast<int>(uniform(rng, 1, n));
    } while (arc.dst == arc.src);
    arc.lower = 0;
    arc.upper = uniform(rng, 1, cfg.max_capacity);
    draw_costs(arc);
    inst.arcs.push_back(arc);
  }
  return inst;
}

}  // namespace bmcif
