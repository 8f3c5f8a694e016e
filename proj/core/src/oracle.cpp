#include "bmcif/oracle.hpp"

#include <algorithm>

namespace bmcif {

namespace {

struct Enumerator {
  const Instance& inst;
  std::vector<Flow>& out;
  std::vector<i64> values;
  std::vector<i64> need;     // remaining outflow - inflow required per node
  std::vector<i64> min_net;  // bounds on the net outflow the unassigned
  std::vector<i64> max_net;  // incident arcs can still produce per node

  Enumerator(const Instance& i, std::vector<Flow>& o)
      : inst(i),
        out(o),
        values(i.arc_count(), 0),
        need(i.node_count + 1, 0),
        min_net(i.node_count + 1, 0),
        max_net(i.node_count + 1, 0) {
    for (int v = 1; v <= inst.node_count; ++v) need[v] = inst.balance(v);
    for (const Arc& arc : inst.arcs) {
      min_net[arc.src] += arc.lower;
      max_net[arc.src] += arc.upper;
      min_net[arc.dst] -= arc.upper;
      max_net[arc.dst] -= arc.lower;
    }
  }

  bool viable() const {
    for (int v = 1; v <= inst.node_count; ++v) {
      if (need[v] < min_net[v] || need[v] > max_net[v]) return false;
    }
    return true;
  }

  void recurse(int a) {
    if (a == inst.arc_count()) {
      bool balanced = true;
      for (int v = 1; v <= inst.node_count; ++v) {
        if (need[v] != 0) balanced = false;
      }
      if (balanced) out.push_back(Flow{values});
      return;
    }
    const Arc& arc = inst.arcs[a];
    // The arc leaves the pool of unassigned arcs.
    min_net[arc.src] -= arc.lower;
    max_net[arc.src] -= arc.upper;
    min_net[arc.dst] += arc.upper;
    max_net[arc.dst] += arc.lower;
    for (i64 f = arc.lower; f <= arc.upper; ++f) {
      values[a] = f;
      need[arc.src] -= f;
      need[arc.dst] += f;
      if (viable()) recurse(a + 1);
      need[arc.src] += f;
      need[arc.dst] -= f;
    }
    min_net[arc.src] += arc.lower;
    max_net[arc.src] += arc.upper;
    min_net[arc.dst] -= arc.upper;
    max_net[arc.dst] += -arc.lower;
  }
};

i64 cross(const BiCost& o, const BiCost& a, const BiCost& b) {
  return (a.c1 - o.c1) * (b.c2 - o.c2) - (a.c2 - o.c2) * (b.c1 - o.c1);
}

}  // namespace

std::vector<Flow> enumerate_all_integer_flows(const Instance& inst, i64 guard) {
  i64 combinations = 1;
  for (const Arc& arc : inst.arcs) {
    i64 range = arc.upper - arc.lower + 1;
    if (combinations > guard / range) {
      throw GuardExceededError("search space exceeds the enumeration guard");
    }
    combinations *= range;
  }
  std::vector<Flow> flows;
  Enumerator e(inst, flows);
  if (e.viable()) e.recurse(0);
  return flows;
}

std::vector<BiCost> filter_nondominated(const std::vector<BiCost>& points) {
  std::vector<BiCost> sorted = points;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<BiCost> result;
  i64 best_c2 = 0;
  for (size_t i = 0; i < sorted.size(); ++i) {
    // Sorted by (c1, c2): within equal c1 only the first can survive, and a
    // point is nondominated iff its c2 beats everything with smaller c1.
    if (i > 0 && sorted[i].c1 == sorted[i - 1].c1) continue;
    if (result.empty() || sorted[i].c2 < best_c2) {
      result.push_back(sorted[i]);
      best_c2 = sorted[i].c2;
    }
  }
  return result;
}

std::vector<ClassifiedPoint> classify_supportedness(
    const std::vector<BiCost>& nondominated) {
  std::vector<BiCost> pts = nondominated;
  std::sort(pts.begin(), pts.end());
  std::vector<ClassifiedPoint> result;
  if (pts.empty()) return result;

  // Lower-left hull (monotone chain over points sorted by c1; nondominated
  // points decrease in c2, so the chain runs to the bottom-right corner).
  std::vector<BiCost> hull;
  for (const BiCost& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0) {
      hull.pop_back();
    }
    hull.push_back(p);
  }

  for (const BiCost& p : pts) {
    SupportLabel label = SupportLabel::unsupported;
    for (size_t h = 0; h < hull.size(); ++h) {
      if (hull[h] == p) {
        label = SupportLabel::extreme;
        break;
      }
      if (h + 1 < hull.size() && hull[h] < p && p < hull[h + 1] &&
          cross(hull[h], p, hull[h + 1]) == 0) {
        label = SupportLabel::supported_nonextreme;
        break;
      }
    }
    result.push_back({p, label});
  }
  return result;
}

}  // namespace bmcif
