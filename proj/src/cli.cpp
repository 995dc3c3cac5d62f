#include "ising/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ising/dual_sampler.hpp"
#include "ising/error.hpp"
#include "ising/exact.hpp"
#include "ising/primal_sampler.hpp"
#include "ising/topology.hpp"

namespace ising::cli {

namespace {

using Json = nlohmann::ordered_json;

// Linear values are only printed while exp() stays comfortably finite.
constexpr double kLinearLimit = 700.0;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelArgs {
  std::string topology;
  std::size_t n = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool periodic = false;
  std::string coupling = "const:1.0";
  std::string model_file;
};

struct Settings {
  ModelArgs model;
  std::string tree = "mst";
  std::string dual_tree;
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string format = "json";
  bool all_domains = false;
  std::string output;
};

struct LoadedModel {
  IsingModel model;
  std::string description;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

template <typename T>
T parse_number(const std::string& text, const std::string& what) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw UsageError("invalid " + what + ": '" + text + "'");
  return value;
}

std::vector<double> make_couplings(const Graph& graph, const std::string& spec) {
  const auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "const") {
    return couplings_constant(graph, parse_number<double>(parts[1], "coupling"));
  }
  if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "uniform") {
    const double lo = parse_number<double>(parts[1], "coupling bound");
    const double hi = parse_number<double>(parts[2], "coupling bound");
    const std::uint64_t seed = parts.size() == 4 ? parse_number<std::uint64_t>(parts[3], "coupling seed") : 1;
    if (!(lo <= hi)) throw UsageError("uniform coupling needs lo <= hi");
    return couplings_uniform(graph, lo, hi, seed);
  }
  throw UsageError("coupling spec must be const:J or uniform:LO:HI[:SEED], got '" + spec + "'");
}

LoadedModel load_model(const ModelArgs& args) {
  if (!args.model_file.empty()) {
    std::ifstream in(args.model_file);
    if (!in) throw UsageError("cannot open model file '" + args.model_file + "'");
    std::stringstream text;
    text << in.rdbuf();
    return {parse_edge_list(text.str()), "file"};
  }
  auto require = [](std::size_t value, const char* flag) {
    if (value == 0) throw UsageError(std::string("topology needs ") + flag);
  };
  std::optional<Graph> graph;
  std::string description;
  if (args.topology == "chain") {
    require(args.n, "--n");
    graph = periodic_chain(args.n);
    description = "chain(n=" + std::to_string(args.n) + ")";
  } else if (args.topology == "grid") {
    require(args.rows, "--rows");
    require(args.cols, "--cols");
    graph = lattice_2d(args.rows, args.cols, args.periodic);
    description = "grid(" + std::to_string(args.rows) + "x" + std::to_string(args.cols) +
                  (args.periodic ? ",periodic)" : ",open)");
  } else if (args.topology == "complete") {
    require(args.n, "--n");
    graph = complete_graph(args.n);
    description = "complete(n=" + std::to_string(args.n) + ")";
  } else if (args.topology.empty()) {
    throw UsageError("either --topology or --model is required");
  } else {
    throw UsageError("unknown topology '" + args.topology + "'");
  }
  auto couplings = make_couplings(*graph, args.coupling);
  return {IsingModel(std::move(*graph), std::move(couplings)), description};
}

TreePartition choose_tree(const IsingModel& model, const std::string& spec) {
  if (spec == "mst") {
    std::vector<double> magnitude;
    for (double j : model.couplings()) magnitude.push_back(std::abs(j));
    return maximum_spanning_tree(model.graph(), magnitude);
  }
  const auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "random") {
    const auto weights = couplings_uniform(model.graph(), 0.0, 1.0, parse_number<std::uint64_t>(parts[1], "tree seed"));
    return maximum_spanning_tree(model.graph(), weights);
  }
  throw UsageError("tree spec must be mst or random:SEED, got '" + spec + "'");
}

Json tree_json(const TreePartition& partition) {
  return Json{{"branch_ids", std::vector<EdgeId>(partition.branch_ids().begin(), partition.branch_ids().end())},
              {"chord_ids", std::vector<EdgeId>(partition.chord_ids().begin(), partition.chord_ids().end())}};
}

void put_log_z(Json& j, double log_z) {
  j["log_Z"] = log_z;
  if (std::abs(log_z) < kLinearLimit) j["log_Z_linear"] = std::exp(log_z);
}

Json estimate_json(const char* estimator, const EstimateReport& r) {
  Json j;
  j["estimator"] = estimator;
  put_log_z(j, r.log_estimate);
  j["log_Z_reduced"] = r.log_reduced_estimate;
  j["std_error_log"] = r.std_error_log;
  j["chi_square"] = r.empirical_chi_square;
  j["samples"] = r.sample_count;
  j["seed"] = r.seed;
  j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

bool has_nan(const Json& j) {
  if (j.is_number_float()) return std::isnan(j.get<double>());
  if (j.is_structured()) {
    for (const auto& item : j) {
      if (has_nan(item)) return true;
    }
  }
  return false;
}

std::string csv_number(const Json& j) {
  if (j.is_null()) return "";
  if (j.is_number_float()) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, j.get<double>());
    return std::string(buffer, ptr);
  }
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string join_ids(const Json& ids) {
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ' ';
    out += id.dump();
  }
  return out;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> columns = {
      "command", "topology",   "vertices",       "edges", "branch_ids", "chord_ids",  "estimator",
      "log_Z",   "log_Z_linear", "log_Z_reduced", "log_Z_M", "log_Z_d", "std_error_log", "chi_square",
      "samples", "seed",       "wall_time_seconds"};
  return columns;
}

void write_csv(const Json& report, std::ostream& out) {
  const auto& columns = csv_columns();
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k];
  out << '\n';
  std::vector<Json> rows;
  const Json& result = report["result"];
  if (result.contains("primal")) {
    rows = {result["primal"], result["dual"]};
  } else {
    rows = {result};
  }
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < columns.size(); ++k) {
      const auto& c = columns[k];
      std::string cell;
      if (c == "command") {
        cell = report["command"].get<std::string>();
      } else if (c == "topology" || c == "vertices" || c == "edges") {
        cell = csv_number(report["model"][c]);
      } else if (c == "branch_ids" || c == "chord_ids") {
        const Json& tree = row.value("estimator", "") == "dual" && report.contains("dual_tree") ? report["dual_tree"]
                                                                                                  : report["tree"];
        cell = join_ids(tree[c]);
      } else if (row.contains(c)) {
        cell = csv_number(row[c]);
      }
      out << (k ? "," : "") << cell;
    }
    out << '\n';
  }
}

Json base_report(const std::string& command, const LoadedModel& loaded, const TreePartition& tree) {
  Json report;
  report["command"] = command;
  report["model"] = Json{{"vertices", loaded.model.graph().vertex_count()},
                         {"edges", loaded.model.graph().edge_count()},
                         {"topology", loaded.description}};
  report["tree"] = tree_json(tree);
  return report;
}

int emit(const Json& report, const Settings& settings, std::ostream& out, std::ostream& err) {
  if (settings.format == "csv") {
    write_csv(report, out);
  } else {
    out << report.dump(2) << '\n';
  }
  if (has_nan(report["result"])) {
    err << "error: numeric failure (NaN in result)\n";
    return kNumericFailure;
  }
  return kSuccess;
}

int run_command(const std::string& command, const Settings& s, std::ostream& out, std::ostream& err) {
  if (command == "gen") {
    const auto loaded = load_model(s.model);
    const std::string text = render_edge_list(loaded.model);
    if (s.output.empty()) {
      out << text;
    } else {
      std::ofstream file(s.output);
      if (!file) throw UsageError("cannot write '" + s.output + "'");
      file << text;
    }
    return kSuccess;
  }

  const auto loaded = load_model(s.model);
  const IsingModel& model = loaded.model;
  const TreePartition tree = choose_tree(model, s.tree);
  Json report = base_report(command, loaded, tree);
  const EstimateOptions options{s.samples, s.seed, s.threads};

  if (command == "exact") {
    Json result;
    put_log_z(result, brute_force_log_Z(model, s.threads));
    if (s.all_domains) {
      result["log_Z_M"] = brute_force_log_ZM(model, tree, s.threads);
      result["log_Z_d"] = brute_force_log_Zd(model, tree, s.threads);
    }
    report["result"] = result;
  } else if (command == "primal") {
    report["result"] = estimate_json("primal", estimate_primal(model, tree, options));
  } else if (command == "dual") {
    report["result"] = estimate_json("dual", estimate_dual(model, tree, options));
  } else if (command == "compare") {
    const bool separate = !s.dual_tree.empty() && s.dual_tree != s.tree;
    const TreePartition dual_tree = separate ? choose_tree(model, s.dual_tree) : tree;
    if (separate) report["dual_tree"] = tree_json(dual_tree);
    const auto primal = estimate_primal(model, tree, options);
    const auto dual = estimate_dual(model, dual_tree, options);
    report["result"] = Json{{"primal", estimate_json("primal", primal)}, {"dual", estimate_json("dual", dual)}};
  }
  return emit(report, s, out, err);
}

void add_model_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--topology", s.model.topology, "chain | grid | complete")
      ->check(CLI::IsMember({"chain", "grid", "complete"}));
  cmd->add_option("--n", s.model.n, "vertex count for chain / complete");
  cmd->add_option("--rows", s.model.rows, "grid rows");
  cmd->add_option("--cols", s.model.cols, "grid columns");
  cmd->add_flag("--periodic", s.model.periodic, "wrap the grid in both directions");
  cmd->add_option("--coupling", s.model.coupling, "const:J | uniform:LO:HI[:SEED]")->capture_default_str();
  cmd->add_option("--model", s.model.model_file, "edge-list file (u v J per line)")->excludes("--topology");
}

void add_report_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--tree", s.tree, "mst | random:SEED")->capture_default_str();
  cmd->add_option("--threads", s.threads, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--format", s.format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

void add_sampler_options(CLI::App* cmd, Settings& s) {
  cmd->add_option("--samples", s.samples, "number of importance samples L")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", s.seed, "base seed of the per-sample streams")->capture_default_str();
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Importance-sampling estimates of Ising partition functions in the primal and dual domains"};
  app.name("ising-is");
  app.require_subcommand(1);

  auto* exact = app.add_subcommand("exact", "brute-force ln Z");
  add_model_options(exact, settings);
  add_report_options(exact, settings);
  exact->add_flag("--all-domains", settings.all_domains, "also report ln Z_M and ln Z_d");

  auto* primal = app.add_subcommand("primal", "spanning-tree proposal, weights on the chords");
  auto* dual = app.add_subcommand("dual", "cotree proposal, weights on the branches");
  auto* compare = app.add_subcommand("compare", "run both estimators on the same model, seed and L");
  for (auto* cmd : {primal, dual, compare}) {
    add_model_options(cmd, settings);
    add_report_options(cmd, settings);
    add_sampler_options(cmd, settings);
  }
  compare->add_option("--dual-tree", settings.dual_tree, "tree for the dual estimator (default: same as --tree)");

  auto* gen = app.add_subcommand("gen", "write an edge-list file");
  add_model_options(gen, settings);
  gen->add_option("--output,-o", settings.output, "destination (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, settings, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kModelError;
  }
}

}  // namespace ising::cli
