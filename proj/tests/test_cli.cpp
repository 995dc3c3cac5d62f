#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ising/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ising::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Drops wall_time_seconds wherever it appears.
Json without_timing(Json j) {
  if (j.is_object()) {
    j.erase("wall_time_seconds");
    for (auto& [key, value] : j.items()) value = without_timing(value);
  }
  return j;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void check_golden(const std::string& name, const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE(r.code == 0);
  const Json actual = without_timing(Json::parse(r.out));
  const auto path = std::filesystem::path(ISING_GOLDEN_DIR) / name;
  if (std::getenv("ISING_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual.dump(2) << '\n';
  }
  REQUIRE(std::filesystem::exists(path));
  CHECK(actual.dump(2) + "\n" == read_file(path));
}

}  // namespace

TEST_CASE("exact report") {
  const auto r = run({"exact", "--topology", "chain", "--n", "3", "--coupling", "const:1.0", "--all-domains"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["command"] == "exact");
  CHECK(j["model"]["vertices"] == 3);
  CHECK(j["model"]["edges"] == 3);
  CHECK(j["tree"]["branch_ids"] == Json::array({0, 1}));
  CHECK(j["tree"]["chord_ids"] == Json::array({2}));
  CHECK(j["result"]["log_Z"].get<double>() == doctest::Approx(3.74663763026587882));
  CHECK(j["result"]["log_Z_linear"].get<double>() == doctest::Approx(42.3783504934039894));
  CHECK(j["result"]["log_Z_M"].get<double>() == doctest::Approx(3.05349044970593351));
  CHECK(j["result"]["log_Z_d"].get<double>() == doctest::Approx(3.74663763026587882));
}

TEST_CASE("primal estimate lands within three standard errors of exact") {
  const std::vector<std::string> model{"--topology", "grid", "--rows", "3", "--cols", "3", "--periodic", "--coupling",
                                       "const:0.3"};
  auto exact_args = model;
  exact_args.insert(exact_args.begin(), "exact");
  auto primal_args = model;
  primal_args.insert(primal_args.begin(), "primal");
  for (const char* extra : {"--samples", "100000", "--seed", "7"}) primal_args.emplace_back(extra);

  const auto exact = Json::parse(run(exact_args).out);
  const auto primal = Json::parse(run(primal_args).out);
  const double diff = primal["result"]["log_Z"].get<double>() - exact["result"]["log_Z"].get<double>();
  CHECK(std::abs(diff) <= 3 * primal["result"]["std_error_log"].get<double>());
  CHECK(primal["result"]["samples"] == 100000);
  CHECK(primal["result"]["seed"] == 7);
}

TEST_CASE("compare in the strong-coupling regime favours the dual estimator") {
  const auto r = run({"compare", "--topology", "grid", "--rows", "3", "--cols", "3", "--periodic", "--coupling",
                      "const:2.0", "--samples", "100000", "--seed", "7"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["dual"]["chi_square"].get<double>() < j["result"]["primal"]["chi_square"].get<double>());
}

TEST_CASE("golden reports") {
  check_golden("exact_chain3.json",
               {"exact", "--topology", "chain", "--n", "3", "--coupling", "const:1.0", "--all-domains"});
  check_golden("primal_grid3.json", {"primal", "--topology", "grid", "--rows", "3", "--cols", "3", "--periodic",
                                     "--coupling", "const:0.3", "--samples", "20000", "--seed", "7"});
  check_golden("compare_complete5.json", {"compare", "--topology", "complete", "--n", "5", "--coupling",
                                          "uniform:0.2:1.4:3", "--samples", "20000", "--seed", "11", "--tree",
                                          "random:4", "--dual-tree", "mst"});
}

TEST_CASE("csv output flattens the report") {
  const auto r = run({"compare", "--topology", "chain", "--n", "4", "--coupling", "const:0.5", "--samples", "1000",
                      "--format", "csv"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::string primal;
  std::string dual;
  std::getline(lines, header);
  std::getline(lines, primal);
  std::getline(lines, dual);
  CHECK(header ==
        "command,topology,vertices,edges,branch_ids,chord_ids,estimator,log_Z,log_Z_linear,log_Z_reduced,log_Z_M,"
        "log_Z_d,std_error_log,chi_square,samples,seed,wall_time_seconds");
  CHECK(primal.rfind("compare,chain(n=4),4,4,0 1 2,3,primal,", 0) == 0);
  CHECK(dual.rfind("compare,chain(n=4),4,4,0 1 2,3,dual,", 0) == 0);
}

TEST_CASE("byte-identical JSON across runs and thread counts") {
  const std::vector<std::string> base{"compare", "--topology", "grid", "--rows", "3", "--cols", "3", "--periodic",
                                      "--coupling", "uniform:0.1:1.5:2", "--samples", "50000", "--seed", "99"};
  std::string reference;
  for (const char* threads : {"1", "1", "1", "2", "8"}) {
    auto args = base;
    args.emplace_back("--threads");
    args.emplace_back(threads);
    const auto r = run(args);
    REQUIRE(r.code == 0);
    const std::string text = without_timing(Json::parse(r.out)).dump(2);
    if (reference.empty()) reference = text;
    CHECK(text == reference);
  }
}

TEST_CASE("gen writes a parseable edge list") {
  const auto r = run({"gen", "--topology", "grid", "--rows", "3", "--cols", "3", "--periodic", "--coupling",
                      "uniform:-1:1:5"});
  REQUIRE(r.code == 0);
  const auto path = std::filesystem::temp_directory_path() / "ising_cli_gen_test.txt";
  std::ofstream(path) << r.out;
  const auto from_file = run({"exact", "--model", path.string()});
  REQUIRE(from_file.code == 0);
  const auto from_topology = run({"exact", "--topology", "grid", "--rows", "3", "--cols", "3", "--periodic",
                                  "--coupling", "uniform:-1:1:5"});
  CHECK(Json::parse(from_file.out)["result"] == Json::parse(from_topology.out)["result"]);
  CHECK(Json::parse(from_file.out)["model"]["topology"] == "file");

  const auto out_path = std::filesystem::temp_directory_path() / "ising_cli_gen_out.txt";
  CHECK(run({"gen", "--topology", "chain", "--n", "5", "--output", out_path.string()}).code == 0);
  CHECK(read_file(out_path).find("4 0 1") != std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(out_path);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == ising::cli::kUsageError);
  CHECK(run({"bogus"}).code == ising::cli::kUsageError);
  CHECK(run({"primal", "--topology", "chain", "--n", "3"}).code == ising::cli::kUsageError);  // --samples missing
  CHECK(run({"exact", "--topology", "grid", "--rows", "3"}).code == ising::cli::kUsageError);
  CHECK(run({"exact", "--topology", "chain", "--n", "3", "--coupling", "weird"}).code == ising::cli::kUsageError);
  CHECK(run({"exact", "--model", "/nonexistent/file"}).code == ising::cli::kUsageError);
  CHECK(run({"primal", "--topology", "chain", "--n", "3", "--samples", "10", "--tree", "bfs"}).code ==
        ising::cli::kUsageError);
  CHECK(run({"--help"}).code == ising::cli::kSuccess);

  CHECK(run({"exact", "--topology", "chain", "--n", "2"}).code == ising::cli::kModelError);
  CHECK(run({"exact", "--topology", "chain", "--n", "30"}).code == ising::cli::kModelError);
  CHECK(run({"dual", "--topology", "chain", "--n", "4", "--coupling", "const:-1", "--samples", "10"}).code ==
        ising::cli::kModelError);
  CHECK(run({"exact", "--topology", "chain", "--n", "4", "--coupling", "const:-1", "--all-domains"}).code ==
        ising::cli::kModelError);
}

TEST_CASE("large ln Z omits the linear value") {
  const auto r = run({"primal", "--topology", "grid", "--rows", "10", "--cols", "10", "--periodic", "--coupling",
                      "const:4.0", "--samples", "10"});
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["result"]["log_Z"].get<double>() > 700);
  CHECK_FALSE(j["result"].contains("log_Z_linear"));
}
