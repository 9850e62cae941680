#include "htw/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "htw/class_oracle.hpp"
#include "htw/decompose.hpp"
#include "htw/decomposition.hpp"
#include "htw/decomposition_json.hpp"
#include "htw/exact.hpp"
#include "htw/graph_io.hpp"
#include "htw/weak_coverage.hpp"

namespace htw {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

using nlohmann::json;

ClassOracle resolve_oracle(const RunConfig& cfg) {
  if (!cfg.family_files.empty()) {
    std::vector<Graph> family;
    std::string name = "family(";
    for (const auto& path : cfg.family_files) {
      if (family.size()) name += ",";
      name += path;
      family.push_back(read_graph_file(path));
    }
    return forbidden_family_oracle(name + ")", std::move(family));
  }
  if (cfg.class_name.empty())
    throw std::runtime_error("no graph class: pass --class or --family");
  return preset_oracle(cfg.class_name);
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw std::runtime_error("cannot write " + cfg.output);
  out << text << "\n";
}

json envelope(const RunConfig& cfg, const ClassOracle& h) {
  return {{"schema", "htw/1"},
          {"command", cfg.command},
          {"input", cfg.input},
          {"class", h.name},
          {"k", cfg.k}};
}

json trace_to_json(const DecomposeTrace& trace) {
  json sub = json::array();
  for (const auto& r : trace.subroutine_records)
    sub.push_back({{"phase_reached", r.phase_reached},
                   {"outcome", r.outcome},
                   {"deletion_set_size", r.deletion_set_size},
                   {"oracle_calls", r.oracle_calls}});
  json rec = json::array();
  for (const auto& r : trace.recursion_records)
    rec.push_back({{"boundary_size", r.boundary_size},
                   {"region_size", r.region_size},
                   {"root_bag_size", r.root_bag_size},
                   {"boundary_in_root_bag", r.boundary_in_root_bag},
                   {"boundary_disjoint_from_base", r.boundary_disjoint_from_base}});
  return {{"subroutine", std::move(sub)}, {"recursion", std::move(rec)}};
}

int run_decompose(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input);
  ClassOracle h = resolve_oracle(cfg);

  DecomposeTrace trace;
  DecomposeOptions options;
  if (cfg.trace) options.trace = &trace;
  DecomposeResult result = decompose(g, cfg.k, h, options);

  json out = envelope(cfg, h);
  out["counters"] = {{"oracle_calls", result.stats.oracle_calls},
                     {"oracle_budget", result.stats.oracle_budget},
                     {"improvements", result.stats.improvements},
                     {"subroutine_invocations", result.stats.subroutine_invocations},
                     {"subproblems", result.stats.subproblems},
                     {"final_deletion_set_size",
                      result.stats.final_deletion_set_size}};
  if (cfg.trace) out["trace"] = trace_to_json(trace);
  if (cfg.exact) out["exact_htw"] = exact_htw(g, h);  // refuses large graphs

  if (result.rejected()) {
    out["result"] = "reject-width";
    emit(cfg, out.dump(2));
    return kNegative;
  }

  const TreeHDecomposition& d = *result.decomposition;
  if (cfg.format == "dot") {
    emit(cfg, to_dot(d));
    return kOk;
  }
  out["result"] = "decomposition";
  out["width"] = width(d);
  out["nodes"] = static_cast<int>(d.nodes.size());
  out["decomposition"] = decomposition_to_json(d);
  emit(cfg, out.dump(2));
  return kOk;
}

int run_validate(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input);
  ClassOracle h = resolve_oracle(cfg);

  std::ifstream in(cfg.decomposition_path);
  if (!in) throw std::runtime_error("cannot read " + cfg.decomposition_path);
  TreeHDecomposition d = decomposition_from_json(json::parse(in));

  ValidationReport report = validate(g, d, h);
  json out = envelope(cfg, h);
  out["valid"] = report.valid();
  out["width"] = width(d);
  out["nodes"] = static_cast<int>(d.nodes.size());
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"rule", static_cast<int>(v.rule)},
                          {"name", rule_name(v.rule)},
                          {"vertex", v.vertex},
                          {"node", v.node},
                          {"edge", v.edge},
                          {"message", v.message}});
  out["violations"] = std::move(violations);
  emit(cfg, out.dump(2));
  return report.valid() ? kOk : kNegative;
}

int run_weak_coverage(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input);
  ClassOracle h = resolve_oracle(cfg);
  VertexSet z(cfg.z);
  for (int v : z)
    if (v < 0 || v >= g.n())
      throw std::runtime_error("terminal " + std::to_string(v) +
                               " outside the vertex range");

  WeakCoverageStats stats;
  CoverageAnswer answer = weak_coverage(g, z, cfg.k, h, &stats);

  json out = envelope(cfg, h);
  out["z"] = z.ids();
  out["counters"] = {{"iterations", stats.iterations},
                     {"improvements", stats.improvements},
                     {"oracle_calls", stats.oracle_calls},
                     {"oracle_budget", stats.oracle_budget}};
  if (cfg.exact)
    out["exists_weak_coverage"] = exists_weak_coverage(g, z, cfg.k, h);

  if (const HSeparation* sep = covered(answer)) {
    out["result"] = "covered";
    out["component"] = sep->c.ids();
    out["separator"] = sep->s.ids();
    out["ell"] = sep->ell;
    emit(cfg, out.dump(2));
    return kOk;
  }
  out["result"] = "no-coverage";
  emit(cfg, out.dump(2));
  return kNegative;
}

int run_exact(const RunConfig& cfg) {
  Graph g = read_graph_file(cfg.input);
  ClassOracle h = resolve_oracle(cfg);

  json out = envelope(cfg, h);
  out["treewidth"] = exact_treewidth(g);
  out["htw"] = exact_htw(g, h);
  out["min_deletion"] = exact_min_deletion(g, h);
  emit(cfg, out.dump(2));
  return kOk;
}

}  // namespace

int run(const RunConfig& cfg) {
  try {
    if (cfg.command == "decompose") return run_decompose(cfg);
    if (cfg.command == "validate") return run_validate(cfg);
    if (cfg.command == "weak-coverage") return run_weak_coverage(cfg);
    if (cfg.command == "exact") return run_exact(cfg);
    std::cerr << "error: unknown command " << cfg.command << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int run_cli(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Tree decompositions with class-restricted base components"};
  app.require_subcommand(1);

  auto add_class_options = [&cfg](CLI::App* cmd) {
    cmd->add_option("--class", cfg.class_name,
                    "preset class: bipartite, edgeless, triangle-free, cluster");
    cmd->add_option("--family", cfg.family_files,
                    "graph files of forbidden induced subgraphs (each n <= 5)");
  };

  auto* dec = app.add_subcommand(
      "decompose", "compute a tree decomposition of width <= 5k+5 or reject");
  dec->add_option("input", cfg.input, "graph file")->required();
  add_class_options(dec);
  dec->add_option("--k", cfg.k, "width parameter")->check(CLI::NonNegativeNumber);
  dec->add_flag("--trace", cfg.trace, "include per-step records in the output");
  dec->add_option("--format", cfg.format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  dec->add_flag("--exact", cfg.exact, "also report the exact value (tiny graphs)");
  dec->add_option("--output", cfg.output, "write the result here");

  auto* val = app.add_subcommand("validate", "check a decomposition JSON file");
  val->add_option("input", cfg.input, "graph file")->required();
  val->add_option("decomposition", cfg.decomposition_path,
                  "decomposition JSON file")
      ->required();
  add_class_options(val);
  val->add_option("--output", cfg.output, "write the report here");

  auto* wc = app.add_subcommand(
      "weak-coverage", "cover terminals by a separation of order <= 2k or refute k");
  wc->add_option("input", cfg.input, "graph file")->required();
  add_class_options(wc);
  wc->add_option("--k", cfg.k, "order parameter")->check(CLI::NonNegativeNumber);
  wc->add_option("--z", cfg.z, "comma-separated terminal ids")
      ->required()
      ->delimiter(',');
  wc->add_flag("--exact", cfg.exact, "also report the brute-force answer");
  wc->add_option("--output", cfg.output, "write the result here");

  auto* ex = app.add_subcommand("exact", "brute-force values for tiny graphs");
  ex->add_option("input", cfg.input, "graph file")->required();
  add_class_options(ex);
  ex->add_option("--k", cfg.k, "reported alongside the results")
      ->check(CLI::NonNegativeNumber);
  ex->add_option("--output", cfg.output, "write the result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (auto* cmd : {dec, val, wc, ex})
    if (cmd->parsed()) cfg.command = cmd->get_name();
  return run(cfg);
}

}  // namespace htw
