#include "bmcif/epsilon.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bmcif {

std::optional<Flow> epsilon_step_standard(const Instance& net, i64 eps) {
  LinearModel model;
  for (const Arc& arc : net.arcs) {
    model.variables.push_back({arc.lower, arc.upper, arc.cost1});
  }
  for (int v = 1; v <= net.node_count; ++v) {
    ModelConstraint row;
    row.coeffs.assign(net.arc_count(), 0);
    for (int a = 0; a < net.arc_count(); ++a) {
      if (net.arcs[a].src == v) row.coeffs[a] += 1;
      if (net.arcs[a].dst == v) row.coeffs[a] -= 1;
    }
    row.relation = Relation::equal;
    row.rhs = net.balance(v);
    model.constraints.push_back(std::move(row));
  }
  ModelConstraint eps_row;
  for (const Arc& arc : net.arcs) eps_row.coeffs.push_back(arc.cost2);
  eps_row.relation = Relation::less_equal;
  eps_row.rhs = eps;
  model.constraints.push_back(std::move(eps_row));

  SolveResult sol = solve_ilp(model);
  if (sol.status != SolveStatus::optimal) return std::nullopt;
  return Flow{sol.assignment};
}

CompactModel build_compact(const Instance& net, const TreeFlow& tf, i64 eps) {
  CompactModel cm;
  cm.base_cost = evaluate_cost(net, tf.flow);

  std::vector<int> non_tree = tf.lower_set;
  non_tree.insert(non_tree.end(), tf.upper_set.begin(), tf.upper_set.end());
  std::sort(non_tree.begin(), non_tree.end());

  for (int a : non_tree) {
    Cycle cyc = induced_cycle(net, tf, a);
    // The variable is the signed number of cycle applications; arc `a`
    // appears in no other cycle, so its capacity window bounds the variable.
    i64 lo, hi;
    if (cyc.chi[a] > 0) {
      lo = net.arcs[a].lower - tf.flow.values[a];
      hi = net.arcs[a].upper - tf.flow.values[a];
    } else {
      lo = tf.flow.values[a] - net.arcs[a].upper;
      hi = tf.flow.values[a] - net.arcs[a].lower;
    }
    cm.model.variables.push_back({lo, hi, cyc.cost.c1});
    cm.variable_arcs.push_back(a);
    cm.cycles.push_back(std::move(cyc));
  }

  // Flow-change windows for every arc touched by some cycle.
  std::set<int> covered;
  for (const Cycle& cyc : cm.cycles) {
    for (int b = 0; b < net.arc_count(); ++b) {
      if (cyc.chi[b] != 0) covered.insert(b);
    }
  }
  for (int b : covered) {
    ModelConstraint upper_row;
    for (const Cycle& cyc : cm.cycles) upper_row.coeffs.push_back(cyc.chi[b]);
    ModelConstraint lower_row = upper_row;
    upper_row.relation = Relation::less_equal;
    upper_row.rhs = net.arcs[b].upper - tf.flow.values[b];
    lower_row.relation = Relation::greater_equal;
    lower_row.rhs = net.arcs[b].lower - tf.flow.values[b];
    cm.model.constraints.push_back(std::move(upper_row));
    cm.model.constraints.push_back(std::move(lower_row));
  }

  ModelConstraint eps_row;
  for (const Cycle& cyc : cm.cycles) eps_row.coeffs.push_back(cyc.cost.c2);
  eps_row.relation = Relation::less_equal;
  eps_row.rhs = eps - cm.base_cost.c2;
  cm.model.constraints.push_back(std::move(eps_row));
  return cm;
}

std::optional<Flow> epsilon_step_compact(const Instance& net,
                                         const TreeFlow& tf, i64 eps) {
  CompactModel cm = build_compact(net, tf, eps);
  SolveResult sol = solve_ilp(cm.model);
  if (sol.status != SolveStatus::optimal) return std::nullopt;

  Flow flow = tf.flow;
  for (size_t k = 0; k < cm.cycles.size(); ++k) {
    for (int b = 0; b < net.arc_count(); ++b) {
      flow.values[b] += sol.assignment[k] * cm.cycles[k].chi[b];
    }
  }
  if (!check_flow_feasible(net, flow) || evaluate_cost(net, flow).c2 > eps) {
    throw std::logic_error("compact solution reconstructs to an invalid flow");
  }
  return flow;
}

ModelDimensions model_dimensions(const Instance& net, const TreeFlow& tf) {
  ModelDimensions dims;
  dims.standard_vars = net.arc_count();
  dims.standard_rows = 2 * net.arc_count() + net.node_count + 1;

  CompactModel cm = build_compact(net, tf, 0);
  dims.compact_vars = static_cast<int>(cm.model.variables.size());
  // All rows but the epsilon row come in window pairs.
  dims.compact_rows = static_cast<int>(cm.model.constraints.size());
  return dims;
}

EpsilonResult all_supported_vectors_epsilon(const Instance& inst,
                                            EpsilonVariant variant) {
  EpsilonResult res;
  Frontier frontier = extreme_supported_points(inst);
  std::map<std::pair<i64, i64>, Flow> seen;

  auto sweep_face = [&](const TreeFlow& witness, i64 l1, i64 l2,
                        const BiCost& right_end) {
    ReducedInstance red = reduce_network(inst, witness.flow, l1, l2);
    Flow base;
    for (int a : red.arc_map) base.values.push_back(witness.flow.values[a]);
    ScalarCost sub_c1;
    for (int a : red.arc_map) sub_c1.push_back(inst.arcs[a].cost1);
    TreeFlow base_tree = extract_tree(red.instance, base, sub_c1);
    // Second-objective cost carried by the pinned arcs; the bound handed to
    // the solvers lives in the reduced network's cost space.
    i64 offset2 = evaluate_cost(inst, witness.flow).c2 -
                  evaluate_cost(red.instance, base).c2;

    std::vector<EpsilonTraceEntry> trace;
    BiCost current = evaluate_cost(inst, witness.flow);
    trace.push_back({current.c2, current, witness.flow});
    seen.emplace(std::pair(current.c1, current.c2), witness.flow);

    while (current != right_end) {
      i64 eps = current.c2 - 1;
      std::optional<Flow> sub;
      if (variant == EpsilonVariant::standard_form) {
        sub = epsilon_step_standard(red.instance, eps - offset2);
      } else {
        sub = epsilon_step_compact(red.instance, base_tree, eps - offset2);
      }
      ++res.ilp_solves;
      if (!sub) break;
      Flow full = lift_flow(red, *sub);
      current = evaluate_cost(inst, full);
      trace.push_back({eps, current, full});
      seen.emplace(std::pair(current.c1, current.c2), full);
    }
    res.traces.push_back(std::move(trace));
  };

  if (frontier.points.size() == 1) {
    sweep_face(frontier.points[0].witness, 1, 1, frontier.points[0].value);
  } else {
    for (int i = 0; i + 1 < static_cast<int>(frontier.points.size()); ++i) {
      FaceWeights w = face_weights(frontier.points[i].value,
                                   frontier.points[i + 1].value);
      sweep_face(frontier.points[i].witness, w.lambda1, w.lambda2,
                 frontier.points[i + 1].value);
    }
  }

  for (const auto& [key, flow] : seen) {
    res.vectors.push_back({BiCost{key.first, key.second}, flow});
  }
  return res;
}

}  // namespace bmcif
