#ifndef BMCIF_FRONTIER_HPP
#define BMCIF_FRONTIER_HPP

#include <vector>

#include "bmcif/mcf.hpp"
#include "bmcif/model.hpp"

namespace bmcif {

/// An extreme nondominated objective vector together with a tree solution
/// attaining it.
struct ExtremePoint {
  BiCost value;
  TreeFlow witness;
};

/// Positive weights under which every flow on the segment between two
/// neighbouring extreme points minimizes the weighted sum.
struct FaceWeights {
  i64 lambda1 = 0;
  i64 lambda2 = 0;
};

/// Extreme points sorted by increasing first objective. Consecutive points
/// span the maximally nondominated faces of the upper image.
struct Frontier {
  std::vector<ExtremePoint> points;

  int face_count() const { return static_cast<int>(points.size()) - 1; }
};

FaceWeights face_weights(const BiCost& left, const BiCost& right);

/// Dichotomic weighted-sum search with lexicographically refined endpoints.
/// Throws InfeasibleError when the instance has no flow at all.
Frontier extreme_supported_points(const Instance& inst);

/// Subnetwork of the arcs with zero reduced cost under the given weights at
/// an optimal flow. Feasible flows of the subnetwork are in bijection with
/// the weighted-sum optima of the full instance; removed arcs stay pinned at
/// their value in `base`.
struct ReducedInstance {
  Instance instance;
  std::vector<int> arc_map;  // subnetwork arc index -> original arc index
  Flow base;                 // pinning flow on the full instance
};

ReducedInstance reduce_network(const Instance& inst, const Flow& optimal,
                               i64 lambda1, i64 lambda2);

/// Maps a feasible flow of the reduced subnetwork back to the full instance.
Flow lift_flow(const ReducedInstance& red, const Flow& sub);

}  // namespace bmcif

#endif  // BMCIF_FRONTIER_HPP
