#ifndef BMCIF_MODEL_HPP
#define BMCIF_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmcif {

using i64 = std::int64_t;

/// A directed arc with box capacities and one integer cost per objective.
/// Node ids are 1-based, matching the instance file format. Parallel arcs
/// are allowed; an arc is identified by its position in Instance::arcs.
struct Arc {
  int src = 0;
  int dst = 0;
  i64 lower = 0;
  i64 upper = 0;
  i64 cost1 = 0;
  i64 cost2 = 0;
};

struct BiCost {
  i64 c1 = 0;
  i64 c2 = 0;

  friend bool operator==(const BiCost&, const BiCost&) = default;
  friend auto operator<=>(const BiCost&, const BiCost&) = default;
  BiCost operator+(const BiCost& o) const { return {c1 + o.c1, c2 + o.c2}; }
  BiCost operator-(const BiCost& o) const { return {c1 - o.c1, c2 - o.c2}; }
};

/// Bi-objective minimum cost integer flow instance.
struct Instance {
  int node_count = 0;
  std::vector<Arc> arcs;
  std::vector<i64> balances;  // size node_count, index = node id - 1

  i64 balance(int node) const { return balances[node - 1]; }
  int arc_count() const { return static_cast<int>(arcs.size()); }
};

/// Integer flow value per arc, in arc-index order.
struct Flow {
  std::vector<i64> values;

  friend bool operator==(const Flow&, const Flow&) = default;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Checks balance sum, capacity order, node index ranges and (undirected)
/// connectivity. Violations are reported, not thrown.
ValidationReport validate_instance(const Instance& inst);

BiCost evaluate_cost(const Instance& inst, const Flow& flow);

bool check_flow_feasible(const Instance& inst, const Flow& flow);

/// Parses the bi-cost text format:
///   c <comment>
///   p bmcf <n> <m>
///   n <id> <balance>
///   a <src> <dst> <lower> <upper> <cost1> <cost2>
/// Throws ParseError with a 1-based line number on malformed input.
Instance read_instance(const std::string& text);

/// Canonical serialization; read_instance(write_instance(i)) == i.
std::string write_instance(const Instance& inst);

/// Shifts all lower bounds to zero, adjusting balances. Returns the
/// transformed instance and the original per-arc lower bounds so flows can
/// be mapped back (original flow = normalized flow + lower).
struct NormalizedInstance {
  Instance instance;
  std::vector<i64> original_lower;
};
NormalizedInstance normalize_lower_bounds(const Instance& inst);

}  // namespace bmcif

#endif  // BMCIF_MODEL_HPP
