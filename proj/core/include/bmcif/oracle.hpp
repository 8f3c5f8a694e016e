#ifndef BMCIF_ORACLE_HPP
#define BMCIF_ORACLE_HPP

#include <vector>

#include "bmcif/model.hpp"

namespace bmcif {

class GuardExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every feasible integer flow, by arc-by-arc recursion with balance
/// pruning. Throws GuardExceededError when the product of the per-arc value
/// ranges exceeds `guard`.
std::vector<Flow> enumerate_all_integer_flows(const Instance& inst,
                                              i64 guard = 10'000'000);

/// The points not dominated under the componentwise order (<= in both
/// coordinates, < in at least one). Result is deduplicated and sorted by
/// increasing first component.
std::vector<BiCost> filter_nondominated(const std::vector<BiCost>& points);

enum class SupportLabel { extreme, supported_nonextreme, unsupported };

struct ClassifiedPoint {
  BiCost value;
  SupportLabel label;
};

/// Classifies a nondominated set by exact lower-left convex hull membership:
/// hull vertices are extreme, points on a hull segment are supported but not
/// extreme, everything else is unsupported.
std::vector<ClassifiedPoint> classify_supportedness(
    const std::vector<BiCost>& nondominated);

}  // namespace bmcif

#endif  // BMCIF_ORACLE_HPP
