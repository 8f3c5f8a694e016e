#ifndef BMCIF_EPSILON_HPP
#define BMCIF_EPSILON_HPP

#include <optional>
#include <utility>
#include <vector>

#include "bmcif/frontier.hpp"
#include "bmcif/ilp.hpp"
#include "bmcif/mcf.hpp"
#include "bmcif/model.hpp"

namespace bmcif {

/// First-objective-minimal integer flow of `net` whose second objective is
/// at most `eps`, via the arc-variable ILP. Empty when no flow meets the
/// bound.
std::optional<Flow> epsilon_step_standard(const Instance& net, i64 eps);

/// The induced-cycle ILP: one integer variable per non-tree arc counting
/// how often its cycle is applied, two-sided flow-change windows per arc
/// touched by any cycle, and the epsilon row relative to the base flow.
struct CompactModel {
  LinearModel model;
  std::vector<int> variable_arcs;  // non-tree arc per variable
  std::vector<Cycle> cycles;       // induced cycle per variable
  BiCost base_cost;                // cost of the base tree flow on `net`
};

CompactModel build_compact(const Instance& net, const TreeFlow& tf, i64 eps);

/// Same optimum as epsilon_step_standard, computed on the compact model and
/// reconstructed through the cycle composition.
std::optional<Flow> epsilon_step_compact(const Instance& net,
                                         const TreeFlow& tf, i64 eps);

/// Model sizes with capacity windows counted as rows, as in the paper's
/// displays: standard (m', 2m' + n' + 1) versus compact
/// (m' - n' + components, 2 * |arcs covered by cycles| + 1).
struct ModelDimensions {
  int standard_vars = 0;
  int standard_rows = 0;
  int compact_vars = 0;
  int compact_rows = 0;
};

ModelDimensions model_dimensions(const Instance& net, const TreeFlow& tf);

enum class EpsilonVariant { standard_form, compact_form };

struct EpsilonTraceEntry {
  i64 eps = 0;  // bound used to obtain the point; the left endpoint records
                // its own second objective
  BiCost point;
  Flow flow;  // on the full instance
};

struct EpsilonResult {
  std::vector<std::pair<BiCost, Flow>> vectors;  // sorted by first objective
  std::vector<std::vector<EpsilonTraceEntry>> traces;  // one per face
  i64 ilp_solves = 0;
};

/// Sweeps every maximally nondominated face from its left endpoint,
/// decrementing eps below each point's second objective until the right
/// endpoint is reached; the union over faces is the supported nondominated
/// set.
EpsilonResult all_supported_vectors_epsilon(const Instance& inst,
                                            EpsilonVariant variant);

}  // namespace bmcif

#endif  // BMCIF_EPSILON_HPP
