#include "bmcif/enumerate_distinct.hpp"

#include <algorithm>
#include <map>

namespace bmcif {

DistanceTable distance_table(const Instance& net, const Flow& flow,
                             const ScalarCost& cost) {
  Potentials pot = node_potentials(net, flow, cost);
  std::vector<i64> rc = reduced_costs(net, pot, cost);

  DistanceTable table;
  int n = net.node_count;
  table.dist.assign(n + 1, std::vector<i64>(n + 1, DistanceTable::INF));
  table.via.assign(n + 1, std::vector<int>(n + 1, -1));
  for (int v = 1; v <= n; ++v) table.dist[v][v] = 0;

  for (int a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arcs[a];
    i64 f = flow.values[a];
    if (f < arc.upper) {
      table.residual.push_back(
          {arc.src, arc.dst, a, true, arc.upper - f, rc[a], 0});
    }
    if (f > arc.lower) {
      table.residual.push_back(
          {arc.dst, arc.src, a, false, f - arc.lower, -rc[a], 0});
    }
  }
  for (int r = 0; r < static_cast<int>(table.residual.size()); ++r) {
    const ResidualArc& ra = table.residual[r];
    if (ra.cost1 < table.dist[ra.from][ra.to]) {
      table.dist[ra.from][ra.to] = ra.cost1;
      table.via[ra.from][ra.to] = r;
    }
  }
  for (int k = 1; k <= n; ++k) {
    for (int i = 1; i <= n; ++i) {
      if (table.dist[i][k] >= DistanceTable::INF) continue;
      for (int j = 1; j <= n; ++j) {
        if (table.dist[k][j] >= DistanceTable::INF) continue;
        i64 cand = table.dist[i][k] + table.dist[k][j];
        if (cand < table.dist[i][j]) {
          table.dist[i][j] = cand;
          table.via[i][j] = table.via[i][k];
        }
      }
    }
  }
  return table;
}

namespace {

/// Residual arc indices of a shortest path, node-simplified (any loop a
/// next-hop walk picks up has zero cost and is cut out).
std::vector<int> recover_path(const DistanceTable& table, int from, int to) {
  std::vector<int> arcs;
  int guard = static_cast<int>(table.dist.size() * table.dist.size()) + 5;
  for (int v = from; v != to;) {
    int r = table.via[v][to];
    if (r < 0 || --guard < 0) {
      throw std::logic_error("distance table path recovery failed");
    }
    arcs.push_back(r);
    v = table.residual[r].to;
  }
  // Cut loops: keep the first occurrence of each node.
  std::vector<int> simplified;
  std::map<int, size_t> seen_at;
  seen_at[from] = 0;
  for (int r : arcs) {
    simplified.push_back(r);
    int node = table.residual[r].to;
    auto it = seen_at.find(node);
    if (it != seen_at.end()) {
      simplified.resize(it->second);
      // Nodes after the cut point are no longer on the path.
      for (auto del = seen_at.begin(); del != seen_at.end();) {
        if (del->second > simplified.size()) {
          del = seen_at.erase(del);
        } else {
          ++del;
        }
      }
    }
    seen_at[node] = simplified.size();
  }
  return simplified;
}

}  // namespace

std::optional<Flow> second_distinct_cost_flow(const Instance& net,
                                              const Flow& optimal,
                                              const ScalarCost& cost) {
  DistanceTable table = distance_table(net, optimal, cost);

  // Candidate arcs: strictly positive reduced cost. At a cost-optimal flow
  // such an arc's own backward copy is never residual (it would have negative
  // reduced cost), and the node-simplified closing path cannot use both
  // copies of any arc, so the composed cycle is always proper.
  int best = -1;
  i64 best_value = DistanceTable::INF;
  for (int r = 0; r < static_cast<int>(table.residual.size()); ++r) {
    const ResidualArc& ra = table.residual[r];
    if (ra.cost1 <= 0) continue;
    if (table.dist[ra.to][ra.from] >= DistanceTable::INF) continue;
    i64 value = ra.cost1 + table.dist[ra.to][ra.from];
    bool better =
        value < best_value ||
        (value == best_value &&
         std::pair(ra.from, ra.to) < std::pair(table.residual[best].from,
                                               table.residual[best].to));
    if (better) {
      best = r;
      best_value = value;
    }
  }
  if (best < 0) return std::nullopt;

  const ResidualArc& start = table.residual[best];
  std::vector<int> path = recover_path(table, start.to, start.from);

  Cycle cyc;
  cyc.chi.assign(net.arc_count(), 0);
  cyc.max_step = start.capacity;
  auto add = [&](const ResidualArc& ra) {
    cyc.chi[ra.arc] = ra.forward ? +1 : -1;
    cyc.cost.c1 += ra.forward ? net.arcs[ra.arc].cost1 : -net.arcs[ra.arc].cost1;
    cyc.cost.c2 += ra.forward ? net.arcs[ra.arc].cost2 : -net.arcs[ra.arc].cost2;
    cyc.max_step = std::min(cyc.max_step, ra.capacity);
  };
  add(start);
  i64 path_rc = 0;
  for (int r : path) {
    add(table.residual[r]);
    path_rc += table.residual[r].cost1;
  }
  if (path_rc != table.dist[start.to][start.from]) {
    throw std::logic_error("recovered path cost disagrees with the table");
  }
  return apply_cycle(net, optimal, cyc, 1);
}

namespace {

struct FaceSweep {
  const Instance& inst;
  const ReducedInstance& red;
  ScalarCost sub_c1;
  AdjustedResult& res;
  i64 leaves = 0;

  FaceSweep(const Instance& i, const ReducedInstance& r, AdjustedResult& out)
      : inst(i), red(r), res(out) {
    for (int a : red.arc_map) sub_c1.push_back(inst.arcs[a].cost1);
  }

  void record(const Flow& sub, std::map<std::pair<i64, i64>, Flow>& seen) {
    Flow full = lift_flow(red, sub);
    BiCost img = evaluate_cost(inst, full);
    seen.emplace(std::pair(img.c1, img.c2), full);
  }

  void recurse(const Instance& net, std::map<std::pair<i64, i64>, Flow>& seen) {
    ++res.partition_nodes;
    // Re-optimize for the first objective under this node's bounds; the
    // step theorem needs a cost-minimal starting flow.
    TreeFlow opt = solve_scalar_mcf(net, sub_c1);
    std::optional<Flow> next = second_distinct_cost_flow(net, opt.flow, sub_c1);
    if (!next) {
      ++leaves;
      record(opt.flow, seen);
      return;
    }
    res.steps.push_back({net, opt.flow, *next});

    // Split on a differing arc, preferring one with nonzero reduced cost:
    // that is the arc whose bound change separates the cost levels, which
    // keeps the leaf count at one per distinct vector on families like the
    // chain-with-priced-arc examples.
    Potentials pot = node_potentials(net, opt.flow, sub_c1);
    std::vector<i64> rc = reduced_costs(net, pot, sub_c1);
    int split = -1;
    for (int a = 0; a < net.arc_count(); ++a) {
      if (opt.flow.values[a] == next->values[a]) continue;
      if (split < 0) split = a;
      if (rc[a] != 0) {
        split = a;
        break;
      }
    }

    i64 low_value = std::min(opt.flow.values[split], next->values[split]);
    Instance left = net;
    left.arcs[split].upper = low_value;
    recurse(left, seen);
    Instance right = net;
    right.arcs[split].lower = low_value + 1;
    recurse(right, seen);
  }
};

}  // namespace

AdjustedResult all_supported_vectors_adjusted(const Instance& inst) {
  AdjustedResult res;
  Frontier frontier = extreme_supported_points(inst);
  std::map<std::pair<i64, i64>, Flow> seen;

  auto sweep_face = [&](const TreeFlow& witness, i64 l1, i64 l2) {
    ReducedInstance red = reduce_network(inst, witness.flow, l1, l2);
    FaceSweep sweep(inst, red, res);
    sweep.recurse(red.instance, seen);
    res.leaves_per_face.push_back(sweep.leaves);
  };

  if (frontier.points.size() == 1) {
    sweep_face(frontier.points[0].witness, 1, 1);
  } else {
    for (int i = 0; i + 1 < static_cast<int>(frontier.points.size()); ++i) {
      FaceWeights w = face_weights(frontier.points[i].value,
                                   frontier.points[i + 1].value);
      sweep_face(frontier.points[i].witness, w.lambda1, w.lambda2);
    }
  }

  for (const auto& [key, flow] : seen) {
    res.vectors.push_back({BiCost{key.first, key.second}, flow});
  }
  return res;
}

}  // namespace bmcif
