#include "bmcif/model.hpp"

#include <numeric>
#include <sstream>

namespace bmcif {

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport report;
  if (inst.node_count <= 0) {
    report.issues.push_back("node count must be positive");
    return report;
  }
  if (static_cast<int>(inst.balances.size()) != inst.node_count) {
    report.issues.push_back("balance vector size does not match node count");
    return report;
  }

  i64 total = std::accumulate(inst.balances.begin(), inst.balances.end(), i64{0});
  if (total != 0) {
    report.issues.push_back("balance sum != 0 (total " + std::to_string(total) + ")");
  }

  for (int a = 0; a < inst.arc_count(); ++a) {
    const Arc& arc = inst.arcs[a];
    if (arc.src < 1 || arc.src > inst.node_count || arc.dst < 1 ||
        arc.dst > inst.node_count) {
      report.issues.push_back("arc " + std::to_string(a + 1) +
                              ": node index out of range");
      continue;
    }
    if (arc.lower < 0) {
      report.issues.push_back("arc " + std::to_string(a + 1) +
                              ": negative lower capacity");
    }
    if (arc.lower > arc.upper) {
      report.issues.push_back("arc " + std::to_string(a + 1) +
                              ": lower capacity exceeds upper");
    }
  }

  // Undirected connectivity, ignoring arc direction.
  if (inst.node_count > 1) {
    std::vector<std::vector<int>> adj(inst.node_count + 1);
    for (const Arc& arc : inst.arcs) {
      if (arc.src >= 1 && arc.src <= inst.node_count && arc.dst >= 1 &&
          arc.dst <= inst.node_count) {
        adj[arc.src].push_back(arc.dst);
        adj[arc.dst].push_back(arc.src);
      }
    }
    std::vector<char> seen(inst.node_count + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != inst.node_count) {
      report.issues.push_back("underlying undirected graph is not connected");
    }
  }
  return report;
}

BiCost evaluate_cost(const Instance& inst, const Flow& flow) {
  if (flow.values.size() != inst.arcs.size()) {
    throw std::invalid_argument("flow arity does not match arc count");
  }
  BiCost cost;
  for (int a = 0; a < inst.arc_count(); ++a) {
    cost.c1 += inst.arcs[a].cost1 * flow.values[a];
    cost.c2 += inst.arcs[a].cost2 * flow.values[a];
  }
  return cost;
}

bool check_flow_feasible(const Instance& inst, const Flow& flow) {
  if (flow.values.size() != inst.arcs.size()) {
    throw std::invalid_argument("flow arity does not match arc count");
  }
  std::vector<i64> net(inst.node_count + 1, 0);  // outflow - inflow per node
  for (int a = 0; a < inst.arc_count(); ++a) {
    const Arc& arc = inst.arcs[a];
    i64 f = flow.values[a];
    if (f < arc.lower || f > arc.upper) return false;
    net[arc.src] += f;
    net[arc.dst] -= f;
  }
  for (int v = 1; v <= inst.node_count; ++v) {
    if (net[v] != inst.balance(v)) return false;
  }
  return true;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

i64 parse_int(const std::string& tok, int lineno) {
  try {
    size_t pos = 0;
    i64 v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "expected integer, got '" + tok + "'");
  }
}

}  // namespace

Instance read_instance(const std::string& text) {
  Instance inst;
  bool have_problem = false;
  int declared_arcs = 0;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_problem) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "bmcf") {
        throw ParseError(lineno, "expected 'p bmcf <n> <m>'");
      }
      i64 n = parse_int(tok[2], lineno);
      i64 m = parse_int(tok[3], lineno);
      if (n <= 0 || m < 0) throw ParseError(lineno, "invalid problem dimensions");
      inst.node_count = static_cast<int>(n);
      inst.balances.assign(inst.node_count, 0);
      declared_arcs = static_cast<int>(m);
      have_problem = true;
      continue;
    }
    if (!have_problem) {
      throw ParseError(1, "missing problem line before '" + tok[0] + "' line");
    }
    if (tok[0] == "n") {
      if (tok.size() != 3) throw ParseError(lineno, "expected 'n <id> <balance>'");
      i64 id = parse_int(tok[1], lineno);
      if (id < 1 || id > inst.node_count) {
        throw ParseError(lineno, "node id out of range");
      }
      inst.balances[id - 1] = parse_int(tok[2], lineno);
      continue;
    }
    if (tok[0] == "a") {
      if (tok.size() != 7) {
        throw ParseError(lineno,
                         "expected 'a <src> <dst> <lower> <upper> <cost1> <cost2>'");
      }
      Arc arc;
      arc.src = static_cast<int>(parse_int(tok[1], lineno));
      arc.dst = static_cast<int>(parse_int(tok[2], lineno));
      arc.lower = parse_int(tok[3], lineno);
      arc.upper = parse_int(tok[4], lineno);
      arc.cost1 = parse_int(tok[5], lineno);
      arc.cost2 = parse_int(tok[6], lineno);
      inst.arcs.push_back(arc);
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
  }
  if (!have_problem) throw ParseError(1, "missing problem line");
  if (inst.arc_count() != declared_arcs) {
    throw ParseError(lineno, "arc count mismatch: declared " +
                                 std::to_string(declared_arcs) + ", found " +
                                 std::to_string(inst.arc_count()));
  }
  return inst;
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "p bmcf " << inst.node_count << " " << inst.arc_count() << "\n";
  for (int v = 1; v <= inst.node_count; ++v) {
    if (inst.balance(v) != 0) {
      out << "n " << v << " " << inst.balance(v) << "\n";
    }
  }
  for (const Arc& arc : inst.arcs) {
    out << "a " << arc.src << " " << arc.dst << " " << arc.lower << " "
        << arc.upper << " " << arc.cost1 << " " << arc.cost2 << "\n";
  }
  return out.str();
}

NormalizedInstance normalize_lower_bounds(const Instance& inst) {
  NormalizedInstance result;
  result.instance = inst;
  result.original_lower.reserve(inst.arcs.size());
  for (Arc& arc : result.instance.arcs) {
    result.original_lower.push_back(arc.lower);
    if (arc.lower != 0) {
      result.instance.balances[arc.src - 1] -= arc.lower;
      result.instance.balances[arc.dst - 1] += arc.lower;
      arc.upper -= arc.lower;
      arc.lower = 0;
    }
  }
  return result;
}

}  // namespace bmcif
