#include <algorithm>
#include <array>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bmcif/enumerate_aof.hpp"
#include "bmcif/enumerate_distinct.hpp"
#include "bmcif/epsilon.hpp"
#include "bmcif/frontier.hpp"
#include "bmcif/generators.hpp"
#include "bmcif/oracle.hpp"

namespace {

constexpr int kExitDisagreement = 1;
constexpr int kExitBadUsage = 2;
constexpr int kExitUnreadable = 3;
constexpr int kExitGuard = 4;

struct Unreadable {
  std::string message;
};

bmcif::Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Unreadable{"cannot open instance file: " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return bmcif::read_instance(buffer.str());
  } catch (const bmcif::ParseError& e) {
    throw Unreadable{path + ": " + e.what()};
  }
}

/// Output sink: --out path or stdout.
struct Sink {
  std::ofstream file;
  bool to_file = false;

  explicit Sink(const std::string& out_path) {
    if (!out_path.empty()) {
      file.open(out_path);
      to_file = true;
    }
  }
  std::ostream& stream() { return to_file ? file : std::cout; }
};

std::vector<bmcif::i64> parse_weights(const std::string& spec) {
  std::vector<bmcif::i64> weights;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) weights.push_back(std::stoll(item));
  }
  return weights;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct GenOptions {
  std::string family;
  std::string weights = "1,2,3";
  bmcif::i64 target = 0;  // accepted for interface symmetry; the gadget
                          // encodes every subset sum at once
  int k = 5;
  bmcif::i64 m_param = 10;
  bmcif::i64 l_param = 5;
  int nodes = 20;
  int arcs = 40;
  bmcif::i64 max_cost = 10;
  bmcif::i64 max_cap = 50;
  bmcif::i64 supply = 50;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  bmcif::Instance inst;
  if (opt.family == "subset-sum") {
    inst = bmcif::gen_subset_sum(parse_weights(opt.weights));
  } else if (opt.family == "path-cycles") {
    inst = bmcif::gen_example_path_cycles(opt.k, opt.m_param, opt.l_param);
  } else if (opt.family == "backarcs") {
    inst = bmcif::gen_example_backarcs(opt.k, opt.l_param);
  } else {
    bmcif::RandomConfig cfg;
    cfg.node_count = opt.nodes;
    cfg.arc_count = opt.arcs;
    cfg.max_cost = opt.max_cost;
    cfg.max_capacity = opt.max_cap;
    cfg.total_supply = opt.supply;
    cfg.seed = opt.seed;
    inst = bmcif::gen_random(cfg);
  }
  Sink sink(opt.out);
  sink.stream() << bmcif::write_instance(inst);
  return 0;
}

int run_extreme(const std::string& instance_path, const std::string& out) {
  bmcif::Instance inst = load_instance(instance_path);
  bmcif::Frontier frontier = bmcif::extreme_supported_points(inst);
  Sink sink(out);
  sink.stream() << "c1, c2\n";
  for (const bmcif::ExtremePoint& p : frontier.points) {
    sink.stream() << p.value.c1 << ", " << p.value.c2 << "\n";
  }
  return 0;
}

int run_supported_flows(const std::string& instance_path, bool count_only,
                        const std::string& out) {
  bmcif::Instance inst = load_instance(instance_path);
  std::vector<bmcif::Flow> flows = bmcif::all_supported_flows(inst);
  Sink sink(out);
  if (count_only) {
    sink.stream() << flows.size() << "\n";
    return 0;
  }
  for (const bmcif::Flow& f : flows) {
    for (size_t a = 0; a < f.values.size(); ++a) {
      sink.stream() << (a ? " " : "") << f.values[a];
    }
    sink.stream() << "\n";
  }
  return 0;
}

int run_supported_vectors(const std::string& instance_path,
                          const std::string& out) {
  bmcif::Instance inst = load_instance(instance_path);
  bmcif::AdjustedResult res = bmcif::all_supported_vectors_adjusted(inst);
  Sink sink(out);
  sink.stream() << "c1, c2\n";
  for (const auto& [value, witness] : res.vectors) {
    sink.stream() << value.c1 << ", " << value.c2 << "\n";
  }
  std::cerr << "vectors: " << res.vectors.size()
            << ", branch nodes: " << res.partition_nodes << "\n";
  return 0;
}

int run_epsilon(const std::string& instance_path, const std::string& variant,
                const std::string& out) {
  bmcif::Instance inst = load_instance(instance_path);
  bmcif::EpsilonVariant v = variant == "compact"
                                ? bmcif::EpsilonVariant::compact_form
                                : bmcif::EpsilonVariant::standard_form;
  bmcif::EpsilonResult res = bmcif::all_supported_vectors_epsilon(inst, v);
  Sink sink(out);
  sink.stream() << "c1, c2\n";
  for (const auto& [value, witness] : res.vectors) {
    sink.stream() << value.c1 << ", " << value.c2 << "\n";
  }

  // Model-size report per face, from the face's reduced network.
  bmcif::Frontier frontier = bmcif::extreme_supported_points(inst);
  int faces = std::max(frontier.face_count(), 1);
  for (int i = 0; i < faces; ++i) {
    bmcif::i64 l1 = 1, l2 = 1;
    if (frontier.face_count() >= 1) {
      bmcif::FaceWeights w = bmcif::face_weights(
          frontier.points[i].value, frontier.points[i + 1].value);
      l1 = w.lambda1;
      l2 = w.lambda2;
    }
    bmcif::ReducedInstance red = bmcif::reduce_network(
        inst, frontier.points[i].witness.flow, l1, l2);
    bmcif::Flow base;
    bmcif::ScalarCost sub_c1;
    for (int a : red.arc_map) {
      base.values.push_back(frontier.points[i].witness.flow.values[a]);
      sub_c1.push_back(inst.arcs[a].cost1);
    }
    bmcif::TreeFlow tf = bmcif::extract_tree(red.instance, base, sub_c1);
    bmcif::ModelDimensions dims = bmcif::model_dimensions(red.instance, tf);
    std::cerr << "face " << i << ": standard " << dims.standard_vars
              << " vars / " << dims.standard_rows << " rows, compact "
              << dims.compact_vars << " vars / " << dims.compact_rows
              << " rows\n";
  }
  std::cerr << "ilp solves: " << res.ilp_solves << "\n";
  return 0;
}

int run_verify(const std::string& instance_path) {
  bmcif::Instance inst = load_instance(instance_path);

  std::set<std::pair<bmcif::i64, bmcif::i64>> oracle_set;
  std::vector<bmcif::Flow> all_flows;
  try {
    all_flows = bmcif::enumerate_all_integer_flows(inst);
  } catch (const bmcif::GuardExceededError& e) {
    std::cerr << "oracle guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  }
  std::vector<bmcif::BiCost> images;
  for (const bmcif::Flow& f : all_flows) {
    images.push_back(bmcif::evaluate_cost(inst, f));
  }
  for (const auto& cp :
       bmcif::classify_supportedness(bmcif::filter_nondominated(images))) {
    if (cp.label != bmcif::SupportLabel::unsupported) {
      oracle_set.insert({cp.value.c1, cp.value.c2});
    }
  }

  std::vector<bmcif::Flow> aof = bmcif::all_supported_flows(inst);
  std::set<std::pair<bmcif::i64, bmcif::i64>> aof_set;
  for (const bmcif::Flow& f : aof) {
    bmcif::BiCost c = bmcif::evaluate_cost(inst, f);
    aof_set.insert({c.c1, c.c2});
  }
  auto to_set = [](const std::vector<std::pair<bmcif::BiCost, bmcif::Flow>>&
                       vectors) {
    std::set<std::pair<bmcif::i64, bmcif::i64>> s;
    for (const auto& [value, witness] : vectors) s.insert({value.c1, value.c2});
    return s;
  };
  auto adjusted_set = to_set(bmcif::all_supported_vectors_adjusted(inst).vectors);
  auto eps_std_set = to_set(
      bmcif::all_supported_vectors_epsilon(
          inst, bmcif::EpsilonVariant::standard_form)
          .vectors);
  auto eps_cmp_set = to_set(
      bmcif::all_supported_vectors_epsilon(
          inst, bmcif::EpsilonVariant::compact_form)
          .vectors);

  struct Named {
    const char* name;
    const std::set<std::pair<bmcif::i64, bmcif::i64>>& set;
  };
  Named methods[] = {{"aof", aof_set},
                     {"adjusted", adjusted_set},
                     {"epsilon-standard", eps_std_set},
                     {"epsilon-compact", eps_cmp_set}};
  bool ok = true;
  for (const Named& m : methods) {
    if (m.set == oracle_set) continue;
    ok = false;
    std::cerr << "disagreement: " << m.name << " vs oracle\n";
    for (const auto& [c1, c2] : m.set) {
      if (!oracle_set.count({c1, c2})) {
        std::cerr << "  extra (" << c1 << "," << c2 << ")\n";
      }
    }
    for (const auto& [c1, c2] : oracle_set) {
      if (!m.set.count({c1, c2})) {
        std::cerr << "  missing (" << c1 << "," << c2 << ")\n";
      }
    }
  }
  std::cout << "|Y_SN|=" << oracle_set.size() << ", |X_SN|=" << aof.size()
            << (ok ? ", all methods agree" : ", DISAGREEMENT") << "\n";
  return ok ? 0 : kExitDisagreement;
}

struct BenchRow {
  std::string name;
  size_t extreme = 0;
  size_t vectors = 0;
  size_t flows = 0;
  double t_ao = 0;
  double t_ds = 0;
  double t_eps = 0;
  double t_new_eps = 0;
};

BenchRow bench_one(const std::string& path) {
  BenchRow row;
  row.name = std::filesystem::path(path).filename().string();
  bmcif::Instance inst = load_instance(path);
  row.extreme = bmcif::extreme_supported_points(inst).points.size();

  auto t0 = std::chrono::steady_clock::now();
  row.flows = bmcif::all_supported_flows(inst).size();
  row.t_ao = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  row.vectors = bmcif::all_supported_vectors_adjusted(inst).vectors.size();
  row.t_ds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  bmcif::all_supported_vectors_epsilon(inst,
                                       bmcif::EpsilonVariant::standard_form);
  row.t_eps = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  bmcif::all_supported_vectors_epsilon(inst,
                                       bmcif::EpsilonVariant::compact_form);
  row.t_new_eps = seconds_since(t0);
  return row;
}

int run_bench(const std::string& dir, const std::string& out, bool parallel) {
  std::vector<std::string> paths;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) paths.push_back(entry.path().string());
  }
  if (ec || paths.empty()) {
    throw Unreadable{"no instances found in: " + dir};
  }
  std::sort(paths.begin(), paths.end());

  std::vector<BenchRow> rows;
  if (parallel) {
    std::vector<std::future<BenchRow>> futures;
    for (const std::string& p : paths) {
      futures.push_back(std::async(std::launch::async, bench_one, p));
    }
    for (auto& f : futures) rows.push_back(f.get());
  } else {
    for (const std::string& p : paths) rows.push_back(bench_one(p));
  }

  Sink sink(out);
  std::ostream& os = sink.stream();
  os << "instance, |Y_EN|, |Y_SN|, |X_SN|, t_AO, t_DS, t_eps, t_new_eps\n";
  auto count_fmt = [](double v) {
    std::ostringstream s;
    if (v == static_cast<double>(static_cast<long long>(v))) {
      s << static_cast<long long>(v);
    } else {
      s << std::fixed << std::setprecision(2) << v;
    }
    return s.str();
  };
  auto time_fmt = [](double v) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(4) << v;
    return s.str();
  };
  auto emit = [&](const std::string& name, double en, double sn, double xsn,
                  double ao, double ds, double eps, double neps) {
    os << name << ", " << count_fmt(en) << ", " << count_fmt(sn) << ", "
       << count_fmt(xsn) << ", " << time_fmt(ao) << ", " << time_fmt(ds)
       << ", " << time_fmt(eps) << ", " << time_fmt(neps) << "\n";
  };
  std::vector<std::array<double, 7>> numeric;
  for (const BenchRow& r : rows) {
    emit(r.name, static_cast<double>(r.extreme), static_cast<double>(r.vectors),
         static_cast<double>(r.flows), r.t_ao, r.t_ds, r.t_eps, r.t_new_eps);
    numeric.push_back({static_cast<double>(r.extreme),
                       static_cast<double>(r.vectors),
                       static_cast<double>(r.flows), r.t_ao, r.t_ds, r.t_eps,
                       r.t_new_eps});
  }
  std::array<double, 7> mins = numeric[0], maxs = numeric[0], sums{};
  for (const auto& row : numeric) {
    for (int j = 0; j < 7; ++j) {
      mins[j] = std::min(mins[j], row[j]);
      maxs[j] = std::max(maxs[j], row[j]);
      sums[j] += row[j];
    }
  }
  emit("min", mins[0], mins[1], mins[2], mins[3], mins[4], mins[5], mins[6]);
  emit("max", maxs[0], maxs[1], maxs[2], maxs[3], maxs[4], maxs[5], maxs[6]);
  double n = static_cast<double>(numeric.size());
  emit("mean", sums[0] / n, sums[1] / n, sums[2] / n, sums[3] / n, sums[4] / n,
       sums[5] / n, sums[6] / n);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-objective minimum cost integer flow toolkit"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--family", gen_opt.family, "Instance family")
      ->required()
      ->check(CLI::IsMember({"subset-sum", "path-cycles", "backarcs",
                             "random"}));
  gen->add_option("--weights", gen_opt.weights, "Comma-separated item weights");
  gen->add_option("--target", gen_opt.target, "Subset-sum target (informational)");
  gen->add_option("--k", gen_opt.k, "Chain length");
  gen->add_option("--m-param", gen_opt.m_param, "Back-arc capacity M");
  gen->add_option("--l-param", gen_opt.l_param, "Priced-arc capacity L");
  gen->add_option("--nodes", gen_opt.nodes, "Node count");
  gen->add_option("--arcs", gen_opt.arcs, "Arc count");
  gen->add_option("--max-cost", gen_opt.max_cost, "Greatest cost");
  gen->add_option("--max-cap", gen_opt.max_cap, "Greatest capacity");
  gen->add_option("--supply", gen_opt.supply, "Total supply");
  gen->add_option("--seed", gen_opt.seed, "Random seed");
  gen->add_option("--out", gen_opt.out, "Output file (default stdout)");

  std::string instance_path, out_path, variant = "standard";
  bool count_only = false, parallel = false;
  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance_path, "Instance file")->required();
    cmd->add_option("--out", out_path, "Output file (default stdout)");
  };
  CLI::App* extreme = app.add_subcommand("extreme", "Extreme supported points");
  add_instance(extreme);
  CLI::App* flows =
      app.add_subcommand("supported-flows", "All supported efficient flows");
  add_instance(flows);
  flows->add_flag("--count-only", count_only, "Print only the flow count");
  CLI::App* vectors = app.add_subcommand("supported-vectors",
                                         "Supported nondominated vectors");
  add_instance(vectors);
  CLI::App* epsilon =
      app.add_subcommand("epsilon", "Epsilon-constraint face sweep");
  add_instance(epsilon);
  epsilon->add_option("--variant", variant, "ILP formulation")
      ->check(CLI::IsMember({"standard", "compact"}));
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-check all methods against the oracle");
  add_instance(verify);
  CLI::App* bench = app.add_subcommand("bench", "Benchmark a directory of instances");
  bench->add_option("--instance", instance_path, "Instance directory")
      ->required();
  bench->add_option("--out", out_path, "CSV output file (default stdout)");
  bench->add_flag("--parallel", parallel, "Benchmark instances concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);
    if (extreme->parsed()) return run_extreme(instance_path, out_path);
    if (flows->parsed()) {
      return run_supported_flows(instance_path, count_only, out_path);
    }
    if (vectors->parsed()) return run_supported_vectors(instance_path, out_path);
    if (epsilon->parsed()) return run_epsilon(instance_path, variant, out_path);
    if (verify->parsed()) return run_verify(instance_path);
    if (bench->parsed()) return run_bench(instance_path, out_path, parallel);
  } catch (const Unreadable& u) {
    std::cerr << u.message << "\n";
    return kExitUnreadable;
  } catch (const bmcif::GuardExceededError& e) {
    std::cerr << "oracle guard exceeded: " << e.what() << "\n";
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
