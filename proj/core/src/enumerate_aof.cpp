#include "bmcif/enumerate_aof.hpp"

#include <deque>
#include <limits>
#include <set>

namespace bmcif {

namespace {

Cycle cycle_from_residual_arcs(const Instance& net, const Flow& flow,
                               const std::vector<const ResidualArc*>& arcs) {
  Cycle cyc;
  cyc.chi.assign(net.arc_count(), 0);
  cyc.max_step = std::numeric_limits<i64>::max() / 4;
  for (const ResidualArc* ra : arcs) {
    cyc.chi[ra->arc] = ra->forward ? +1 : -1;
    cyc.cost.c1 += ra->forward ? net.arcs[ra->arc].cost1 : -net.arcs[ra->arc].cost1;
    cyc.cost.c2 += ra->forward ? net.arcs[ra->arc].cost2 : -net.arcs[ra->arc].cost2;
    cyc.max_step = std::min(cyc.max_step, ra->capacity);
  }
  (void)flow;
  return cyc;
}

}  // namespace

std::optional<Cycle> find_proper_cycle(const Instance& net, const Flow& flow) {
  ResidualGraph g = residual(net, flow);
  int n = net.node_count;
  std::vector<std::vector<int>> out(n + 1);
  for (int r = 0; r < static_cast<int>(g.arcs.size()); ++r) {
    out[g.arcs[r].from].push_back(r);
  }

  // A node-simple cycle is proper unless it is the two-arc cycle formed by
  // both residual copies of one original arc. So: for each residual arc,
  // look for a node-simple return path that avoids the reverse copy.
  for (int r = 0; r < static_cast<int>(g.arcs.size()); ++r) {
    const ResidualArc& start = g.arcs[r];
    std::vector<int> via(n + 1, -1);
    std::vector<char> seen(n + 1, 0);
    std::deque<int> queue{start.to};
    seen[start.to] = 1;
    while (!queue.empty() && !seen[start.from]) {
      int v = queue.front();
      queue.pop_front();
      for (int e : out[v]) {
        const ResidualArc& ra = g.arcs[e];
        if (ra.arc == start.arc) continue;  // skip both copies of the arc
        if (!seen[ra.to]) {
          seen[ra.to] = 1;
          via[ra.to] = e;
          queue.push_back(ra.to);
        }
      }
    }
    if (!seen[start.from]) continue;
    std::vector<const ResidualArc*> arcs{&start};
    for (int v = start.from; v != start.to;) {
      arcs.push_back(&g.arcs[via[v]]);
      v = g.arcs[via[v]].from;
    }
    return cycle_from_residual_arcs(net, flow, arcs);
  }
  return std::nullopt;
}

namespace {

void partition(const Instance& net, const Flow& flow,
               std::set<std::vector<i64>>& out) {
  std::optional<Cycle> cyc = find_proper_cycle(net, flow);
  if (!cyc) {
    out.insert(flow.values);
    return;
  }
  Flow next = apply_cycle(net, flow, *cyc, 1);

  int split = -1;
  for (int a = 0; a < net.arc_count(); ++a) {
    if (cyc->chi[a] != 0) {
      split = a;
      break;
    }
  }
  // One child keeps the smaller value on the split arc, the other the
  // larger; the two feasible sets partition the parent's.
  const Flow& low = cyc->chi[split] > 0 ? flow : next;
  const Flow& high = cyc->chi[split] > 0 ? next : flow;

  Instance left = net;
  left.arcs[split].upper = low.values[split];
  partition(left, low, out);

  Instance right = net;
  right.arcs[split].lower = low.values[split] + 1;
  partition(right, high, out);
}

}  // namespace

std::vector<Flow> enumerate_flows_by_partition(const Instance& net,
                                               const Flow& seed) {
  std::set<std::vector<i64>> out;
  partition(net, seed, out);
  std::vector<Flow> flows;
  flows.reserve(out.size());
  for (const auto& values : out) flows.push_back(Flow{values});
  return flows;
}

std::vector<Flow> all_supported_flows(const Instance& inst) {
  Frontier frontier = extreme_supported_points(inst);
  std::set<std::vector<i64>> out;

  auto enumerate_face = [&](const TreeFlow& witness, i64 l1, i64 l2) {
    ReducedInstance red = reduce_network(inst, witness.flow, l1, l2);
    Flow base;
    for (int a : red.arc_map) base.values.push_back(witness.flow.values[a]);
    for (const Flow& sub : enumerate_flows_by_partition(red.instance, base)) {
      out.insert(lift_flow(red, sub).values);
    }
  };

  if (frontier.points.size() == 1) {
    // A single nondominated point: its flows are optimal for any weights.
    enumerate_face(frontier.points[0].witness, 1, 1);
  } else {
    for (int i = 0; i + 1 < static_cast<int>(frontier.points.size()); ++i) {
      FaceWeights w = face_weights(frontier.points[i].value,
                                   frontier.points[i + 1].value);
      enumerate_face(frontier.points[i].witness, w.lambda1, w.lambda2);
    }
  }

  std::vector<Flow> flows;
  flows.reserve(out.size());
  for (const auto& values : out) flows.push_back(Flow{values});
  return flows;
}

}  // namespace bmcif
