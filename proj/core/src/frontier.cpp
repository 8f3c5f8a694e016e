#include "bmcif/frontier.hpp"

#include <utility>

namespace bmcif {

FaceWeights face_weights(const BiCost& left, const BiCost& right) {
  // Orthogonal to the segment from `left` (small c1) to `right` (small c2).
  return {left.c2 - right.c2, right.c1 - left.c1};
}

namespace {

/// Minimizes lambda1*c1 + lambda2*c2 and, among those optima, c1.
TreeFlow weighted_lexmin(const Instance& inst, i64 lambda1, i64 lambda2) {
  ScalarCost wc = weighted_cost(inst, lambda1, lambda2);
  TreeFlow stage1 = solve_scalar_mcf(inst, wc);
  ReducedInstance red = reduce_network(inst, stage1.flow, lambda1, lambda2);
  ScalarCost sub_cost;
  for (int a : red.arc_map) sub_cost.push_back(inst.arcs[a].cost1);
  TreeFlow stage2 = solve_scalar_mcf(red.instance, sub_cost);
  return extract_tree(inst, lift_flow(red, stage2.flow), wc);
}

void dichotomic(const Instance& inst, const ExtremePoint& left,
                const ExtremePoint& right, std::vector<ExtremePoint>& out) {
  FaceWeights w = face_weights(left.value, right.value);
  TreeFlow tf = weighted_lexmin(inst, w.lambda1, w.lambda2);
  BiCost value = evaluate_cost(inst, tf.flow);
  i64 best = w.lambda1 * value.c1 + w.lambda2 * value.c2;
  i64 level = w.lambda1 * left.value.c1 + w.lambda2 * left.value.c2;
  if (best == level) {
    // Nothing below the segment: left and right are neighbours.
    out.push_back(left);
    return;
  }
  ExtremePoint mid{value, std::move(tf)};
  dichotomic(inst, left, mid, out);
  dichotomic(inst, mid, right, out);
}

}  // namespace

Frontier extreme_supported_points(const Instance& inst) {
  Frontier frontier;
  TreeFlow first = lexmin_flow(inst, cost_row1(inst), cost_row2(inst));
  ExtremePoint left{evaluate_cost(inst, first.flow), std::move(first)};
  TreeFlow second = lexmin_flow(inst, cost_row2(inst), cost_row1(inst));
  ExtremePoint right{evaluate_cost(inst, second.flow), std::move(second)};
  if (left.value == right.value) {
    frontier.points.push_back(std::move(left));
    return frontier;
  }
  dichotomic(inst, left, right, frontier.points);
  frontier.points.push_back(std::move(right));
  return frontier;
}

ReducedInstance reduce_network(const Instance& inst, const Flow& optimal,
                               i64 lambda1, i64 lambda2) {
  ScalarCost wc = weighted_cost(inst, lambda1, lambda2);
  Potentials pot = node_potentials(inst, optimal, wc);
  std::vector<i64> rc = reduced_costs(inst, pot, wc);

  ReducedInstance red;
  red.instance.node_count = inst.node_count;
  red.instance.balances = inst.balances;
  red.base = optimal;
  for (int a = 0; a < inst.arc_count(); ++a) {
    if (rc[a] == 0) {
      red.arc_map.push_back(a);
      red.instance.arcs.push_back(inst.arcs[a]);
    } else {
      // Complementary slackness pins the arc to its bound in every optimum.
      i64 f = optimal.values[a];
      red.instance.balances[inst.arcs[a].src - 1] -= f;
      red.instance.balances[inst.arcs[a].dst - 1] += f;
    }
  }
  return red;
}

Flow lift_flow(const ReducedInstance& red, const Flow& sub) {
  if (sub.values.size() != red.arc_map.size()) {
    throw std::invalid_argument("flow arity does not match the subnetwork");
  }
  Flow full = red.base;
  for (size_t k = 0; k < red.arc_map.size(); ++k) {
    full.values[red.arc_map[k]] = sub.values[k];
  }
  return full;
}

}  // namespace bmcif
