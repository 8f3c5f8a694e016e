#include "bmcif/mcf.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <numeric>

namespace bmcif {

namespace {

constexpr i64 kInf = std::numeric_limits<i64>::max() / 4;

i64 artificial_cost(const ScalarCost& cost) {
  i64 total = 1;
  for (i64 c : cost) total += c < 0 ? -c : c;
  return total;
}

struct ResidualAdjacency {
  std::vector<std::vector<int>> out;  // node -> residual arc indices
  std::vector<ResidualArc> arcs;
};

ResidualAdjacency residual_adjacency(const Instance& inst, const Flow& flow,
                                     const ScalarCost& cost) {
  ResidualAdjacency adj;
  adj.out.resize(inst.node_count + 1);
  for (int a = 0; a < inst.arc_count(); ++a) {
    const Arc& arc = inst.arcs[a];
    i64 f = flow.values[a];
    if (f < arc.upper) {
      adj.out[arc.src].push_back(static_cast<int>(adj.arcs.size()));
      adj.arcs.push_back({arc.src, arc.dst, a, true, arc.upper - f, cost[a], 0});
    }
    if (f > arc.lower) {
      adj.out[arc.dst].push_back(static_cast<int>(adj.arcs.size()));
      adj.arcs.push_back({arc.dst, arc.src, a, false, f - arc.lower, -cost[a], 0});
    }
  }
  return adj;
}

// Bellman-Ford over the residual graph from the given initial distances.
// Returns predecessor residual-arc indices; throws NotOptimalError if a
// round past convergence still relaxes (negative cycle).
struct ShortestPaths {
  std::vector<i64> dist;
  std::vector<int> pred;  // residual arc index into adj.arcs, -1 if none
};

ShortestPaths bellman_ford(const ResidualAdjacency& adj, int node_count,
                           std::vector<i64> init) {
  ShortestPaths sp;
  sp.dist = std::move(init);
  sp.pred.assign(node_count + 1, -1);
  for (int round = 0; round <= node_count; ++round) {
    bool changed = false;
    for (int r = 0; r < static_cast<int>(adj.arcs.size()); ++r) {
      const ResidualArc& ra = adj.arcs[r];
      if (sp.dist[ra.from] >= kInf) continue;
      i64 cand = sp.dist[ra.from] + ra.cost1;
      if (cand < sp.dist[ra.to]) {
        sp.dist[ra.to] = cand;
        sp.pred[ra.to] = r;
        changed = true;
      }
    }
    if (!changed) return sp;
  }
  throw NotOptimalError("negative-cost residual cycle detected");
}

}  // namespace

ScalarCost cost_row1(const Instance& inst) {
  ScalarCost c(inst.arc_count());
  for (int a = 0; a < inst.arc_count(); ++a) c[a] = inst.arcs[a].cost1;
  return c;
}

ScalarCost cost_row2(const Instance& inst) {
  ScalarCost c(inst.arc_count());
  for (int a = 0; a < inst.arc_count(); ++a) c[a] = inst.arcs[a].cost2;
  return c;
}

ScalarCost weighted_cost(const Instance& inst, i64 lambda1, i64 lambda2) {
  ScalarCost c(inst.arc_count());
  for (int a = 0; a < inst.arc_count(); ++a) {
    c[a] = lambda1 * inst.arcs[a].cost1 + lambda2 * inst.arcs[a].cost2;
  }
  return c;
}

Potentials node_potentials(const Instance& inst, const Flow& flow,
                           const ScalarCost& cost) {
  ResidualAdjacency adj = residual_adjacency(inst, flow, cost);
  i64 big = artificial_cost(cost);
  // Artificial root arcs of cost `big` to every node keep all potentials
  // finite when parts of the residual graph are unreachable from node 1.
  std::vector<i64> init(inst.node_count + 1, big);
  init[1] = 0;
  ShortestPaths sp = bellman_ford(adj, inst.node_count, std::move(init));
  Potentials pot;
  pot.value.assign(inst.node_count, 0);
  for (int v = 1; v <= inst.node_count; ++v) pot.value[v - 1] = sp.dist[v];
  return pot;
}

std::vector<i64> reduced_costs(const Instance& inst, const Potentials& pot,
                               const ScalarCost& cost) {
  std::vector<i64> rc(inst.arc_count());
  for (int a = 0; a < inst.arc_count(); ++a) {
    const Arc& arc = inst.arcs[a];
    rc[a] = cost[a] + pot.value[arc.src - 1] - pot.value[arc.dst - 1];
  }
  return rc;
}

bool check_optimal(const Instance& inst, const Flow& flow,
                   const ScalarCost& cost) {
  ResidualAdjacency adj = residual_adjacency(inst, flow, cost);
  try {
    bellman_ford(adj, inst.node_count, std::vector<i64>(inst.node_count + 1, 0));
  } catch (const NotOptimalError&) {
    return false;
  }
  return true;
}

ResidualGraph residual(const Instance& inst, const Flow& flow) {
  ResidualGraph g;
  for (int a = 0; a < inst.arc_count(); ++a) {
    const Arc& arc = inst.arcs[a];
    i64 f = flow.values[a];
    if (f < arc.upper) {
      g.arcs.push_back(
          {arc.src, arc.dst, a, true, arc.upper - f, arc.cost1, arc.cost2});
    }
    if (f > arc.lower) {
      g.arcs.push_back(
          {arc.dst, arc.src, a, false, f - arc.lower, -arc.cost1, -arc.cost2});
    }
  }
  return g;
}

TreeFlow extract_tree(const Instance& inst, Flow flow, const ScalarCost& cost) {
  int n = inst.node_count;
  int m = inst.arc_count();

  auto is_free = [&](int a) {
    return flow.values[a] > inst.arcs[a].lower &&
           flow.values[a] < inst.arcs[a].upper;
  };

  // Cancel cycles among free arcs until they form a forest. Such a cycle is
  // residual-feasible in both directions, so at an optimal flow its cost is
  // zero and pushing flow around it preserves optimality.
  for (;;) {
    std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (nbr, arc)
    for (int a = 0; a < m; ++a) {
      if (!is_free(a)) continue;
      adj[inst.arcs[a].src].push_back({inst.arcs[a].dst, a});
      adj[inst.arcs[a].dst].push_back({inst.arcs[a].src, a});
    }
    // Undirected cycle search via iterative DFS with parent-edge tracking.
    std::vector<int> state(n + 1, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<std::pair<int, int>> via(n + 1, {-1, -1});  // (parent, arc)
    std::vector<std::pair<int, int>> cycle;  // (arc, direction)
    for (int root = 1; root <= n && cycle.empty(); ++root) {
      if (state[root] != 0) continue;
      std::vector<std::pair<int, int>> stack{{root, -1}};
      while (!stack.empty() && cycle.empty()) {
        auto [v, in_arc] = stack.back();
        if (state[v] == 0) {
          state[v] = 1;
          for (auto [w, a] : adj[v]) {
            if (a == in_arc) continue;
            if (state[w] == 1) {
              // Closing edge found: walk v back up to w.
              cycle.push_back({a, inst.arcs[a].src == v ? +1 : -1});
              int cur = v;
              while (cur != w) {
                auto [p, pa] = via[cur];
                cycle.push_back({pa, inst.arcs[pa].dst == cur ? +1 : -1});
                cur = p;
              }
              break;
            }
            if (state[w] == 0) {
              via[w] = {v, a};
              stack.push_back({w, a});
            }
          }
        } else {
          state[v] = 2;
          stack.pop_back();
        }
      }
    }
    if (cycle.empty()) break;

    i64 cyc_cost = 0;
    i64 theta = kInf;
    for (auto [a, dir] : cycle) {
      cyc_cost += dir * cost[a];
      theta = std::min(theta, dir > 0 ? inst.arcs[a].upper - flow.values[a]
                                      : flow.values[a] - inst.arcs[a].lower);
    }
    if (cyc_cost != 0) {
      // Either direction of a free cycle is residual-feasible, so a nonzero
      // cost contradicts optimality of the input flow.
      throw NotOptimalError("free-arc cycle with nonzero cost");
    }
    assert(theta >= 1);
    for (auto [a, dir] : cycle) flow.values[a] += dir * theta;
  }

  // Spanning forest: free arcs first, then bound arcs by ascending index.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  TreeFlow tf;
  std::vector<char> in_tree(m, 0);
  auto try_add = [&](int a) {
    int ru = find(inst.arcs[a].src), rv = find(inst.arcs[a].dst);
    if (ru == rv) return;
    parent[ru] = rv;
    in_tree[a] = 1;
    tf.tree_arcs.push_back(a);
  };
  for (int a = 0; a < m; ++a) {
    if (is_free(a)) try_add(a);
  }
  for (int a = 0; a < m; ++a) {
    if (!in_tree[a]) try_add(a);
  }
  for (int a = 0; a < m; ++a) {
    if (in_tree[a]) continue;
    assert(!is_free(a));
    if (flow.values[a] == inst.arcs[a].lower) {
      tf.lower_set.push_back(a);  // ties (lower == upper) resolve to L
    } else {
      tf.upper_set.push_back(a);
    }
  }
  tf.flow = std::move(flow);
  return tf;
}

TreeFlow solve_scalar_mcf(const Instance& inst, const ScalarCost& cost) {
  if (static_cast<int>(cost.size()) != inst.arc_count()) {
    throw std::invalid_argument("cost arity does not match arc count");
  }
  i64 total = std::accumulate(inst.balances.begin(), inst.balances.end(), i64{0});
  if (total != 0) throw InfeasibleError("balances do not sum to zero");

  int n = inst.node_count;
  Flow flow;
  flow.values.resize(inst.arc_count());
  // Start from the lower bounds and saturate negative-cost arcs; afterwards
  // every residual arc has nonnegative cost and successive shortest paths
  // keep the flow cost-minimal for its shipped amount.
  for (int a = 0; a < inst.arc_count(); ++a) {
    flow.values[a] = cost[a] < 0 ? inst.arcs[a].upper : inst.arcs[a].lower;
  }

  auto imbalance = [&](std::vector<i64>& im) {
    im.assign(n + 1, 0);
    for (int v = 1; v <= n; ++v) im[v] = inst.balance(v);
    for (int a = 0; a < inst.arc_count(); ++a) {
      im[inst.arcs[a].src] -= flow.values[a];
      im[inst.arcs[a].dst] += flow.values[a];
    }
  };

  std::vector<i64> im;
  for (;;) {
    imbalance(im);
    int source = 0;
    for (int v = 1; v <= n; ++v) {
      if (im[v] > 0) {
        source = v;
        break;
      }
    }
    if (source == 0) break;

    ResidualAdjacency adj = residual_adjacency(inst, flow, cost);
    std::vector<i64> init(n + 1, kInf);
    init[source] = 0;
    ShortestPaths sp = bellman_ford(adj, n, std::move(init));

    int sink = 0;
    for (int v = 1; v <= n; ++v) {
      if (im[v] < 0 && sp.dist[v] < kInf &&
          (sink == 0 || sp.dist[v] < sp.dist[sink])) {
        sink = v;
      }
    }
    if (sink == 0) throw InfeasibleError("no residual path from surplus to deficit");

    i64 delta = std::min(im[source], -im[sink]);
    for (int v = sink; v != source;) {
      const ResidualArc& ra = adj.arcs[sp.pred[v]];
      delta = std::min(delta, ra.capacity);
      v = ra.from;
    }
    for (int v = sink; v != source;) {
      const ResidualArc& ra = adj.arcs[sp.pred[v]];
      flow.values[ra.arc] += ra.forward ? delta : -delta;
      v = ra.from;
    }
  }
  return extract_tree(inst, std::move(flow), cost);
}

TreeFlow lexmin_flow(const Instance& inst, const ScalarCost& first,
                     const ScalarCost& second) {
  TreeFlow stage1 = solve_scalar_mcf(inst, first);
  Potentials pot = node_potentials(inst, stage1.flow, first);
  std::vector<i64> rc = reduced_costs(inst, pot, first);

  // Restrict to the zero-reduced-cost subnetwork of stage one and optimize
  // the second cost there; feasible flows of that subnetwork lift to exactly
  // the stage-one optima.
  Instance sub;
  sub.node_count = inst.node_count;
  sub.balances = inst.balances;
  ScalarCost sub_cost;
  std::vector<int> kept;
  for (int a = 0; a < inst.arc_count(); ++a) {
    if (rc[a] == 0) {
      kept.push_back(a);
      sub.arcs.push_back(inst.arcs[a]);
      sub_cost.push_back(second[a]);
    } else {
      i64 f = stage1.flow.values[a];
      sub.balances[inst.arcs[a].src - 1] -= f;
      sub.balances[inst.arcs[a].dst - 1] += f;
    }
  }
  TreeFlow stage2 = solve_scalar_mcf(sub, sub_cost);

  Flow lifted = stage1.flow;
  for (size_t k = 0; k < kept.size(); ++k) {
    lifted.values[kept[k]] = stage2.flow.values[k];
  }
  return extract_tree(inst, std::move(lifted), first);
}

Cycle induced_cycle(const Instance& inst, const TreeFlow& tf, int arc_index) {
  const auto& T = tf.tree_arcs;
  if (std::find(T.begin(), T.end(), arc_index) != T.end()) {
    throw std::invalid_argument("arc is a tree arc");
  }
  bool at_upper = std::find(tf.upper_set.begin(), tf.upper_set.end(),
                            arc_index) != tf.upper_set.end();

  // Tree path from dst back to src of the entering arc.
  int n = inst.node_count;
  std::vector<std::vector<std::pair<int, int>>> adj(n + 1);
  for (int a : T) {
    adj[inst.arcs[a].src].push_back({inst.arcs[a].dst, a});
    adj[inst.arcs[a].dst].push_back({inst.arcs[a].src, a});
  }
  int i = inst.arcs[arc_index].src, j = inst.arcs[arc_index].dst;
  std::vector<std::pair<int, int>> via(n + 1, {-1, -1});
  std::vector<char> seen(n + 1, 0);
  std::deque<int> queue{j};
  seen[j] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == i) break;
    for (auto [w, a] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        via[w] = {v, a};
        queue.push_back(w);
      }
    }
  }
  if (!seen[i]) {
    throw std::invalid_argument("arc endpoints not connected in the tree");
  }

  Cycle cyc;
  cyc.chi.assign(inst.arc_count(), 0);
  int orient = at_upper ? -1 : +1;  // cycle direction relative to the arc
  cyc.chi[arc_index] = orient;
  for (int v = i; v != j;) {
    auto [p, a] = via[v];
    // Walk j -> i traverses p -> v; flip when the cycle runs against it.
    cyc.chi[a] = orient * (inst.arcs[a].dst == v ? +1 : -1);
    v = p;
  }

  cyc.max_step = kInf;
  for (int a = 0; a < inst.arc_count(); ++a) {
    if (cyc.chi[a] == 0) continue;
    cyc.cost.c1 += cyc.chi[a] * inst.arcs[a].cost1;
    cyc.cost.c2 += cyc.chi[a] * inst.arcs[a].cost2;
    i64 slack = cyc.chi[a] > 0 ? inst.arcs[a].upper - tf.flow.values[a]
                               : tf.flow.values[a] - inst.arcs[a].lower;
    cyc.max_step = std::min(cyc.max_step, slack);
  }
  return cyc;
}

Flow apply_cycle(const Instance& inst, const Flow& flow, const Cycle& cyc,
                 i64 theta) {
  if (theta < 1 || theta > cyc.max_step) {
    throw std::invalid_argument("theta exceeds the cycle's residual bound");
  }
  Flow result = flow;
  for (int a = 0; a < inst.arc_count(); ++a) {
    result.values[a] += theta * cyc.chi[a];
  }
  return result;
}

std::vector<i64> decompose_difference(const Instance& inst, const TreeFlow& tf,
                                      const Flow& other) {
  std::vector<i64> coeff(inst.arc_count(), 0);
  Flow rebuilt = tf.flow;
  BiCost shift;
  for (int a = 0; a < inst.arc_count(); ++a) {
    bool in_tree = std::find(tf.tree_arcs.begin(), tf.tree_arcs.end(), a) !=
                   tf.tree_arcs.end();
    if (in_tree) continue;
    i64 delta = other.values[a] - tf.flow.values[a];
    Cycle cyc = induced_cycle(inst, tf, a);
    coeff[a] = delta * cyc.chi[a];  // chi[a] is +1 (L) or -1 (U)
    for (int b = 0; b < inst.arc_count(); ++b) {
      rebuilt.values[b] += coeff[a] * cyc.chi[b];
    }
    shift.c1 += coeff[a] * cyc.cost.c1;
    shift.c2 += coeff[a] * cyc.cost.c2;
  }
  if (rebuilt != other) {
    throw std::logic_error("cycle composition failed to reproduce the flow");
  }
  BiCost expected = evaluate_cost(inst, other) - evaluate_cost(inst, tf.flow);
  if (shift != expected) {
    throw std::logic_error("cycle composition cost identity violated");
  }
  return coeff;
}

}  // namespace bmcif
