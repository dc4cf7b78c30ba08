#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"
#include "divsearch/verify.hpp"

using namespace divsearch;
using namespace divsearch::cli;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("bounds CSV") {
  BoundsArgs a;
  a.n_list = {4, 15};
  std::ostringstream out;
  CHECK(cmd_bounds(a, out) == 0);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "n,s1,s2,f_rs1,f_rs2,f_rs2s,r_s2,r_rs2s");
  CHECK(lines[1].rfind("4,3,3,3,", 0) == 0);
  CHECK(lines[2].rfind("15,13,12,", 0) == 0);
}

TEST_CASE("bounds at one million") {
  BoundsArgs a;
  a.n_list = {1000000};
  a.format = Format::Json;
  std::ostringstream out;
  cmd_bounds(a, out);
  const auto row = nlohmann::json::parse(out.str()).at(0);
  const double r_s2 = row.at("r_s2").get<double>();
  const double r_rs2s = row.at("r_rs2s").get<double>();
  CHECK(r_s2 >= 0.7638);
  CHECK(r_s2 <= 0.7660);
  CHECK(r_rs2s >= 0.7575);
  CHECK(r_rs2s <= 0.7582);
}

TEST_CASE("layers output") {
  LayersArgs a;
  a.n = 1;
  std::ostringstream one;
  cmd_layers(a, one);
  CHECK(one.str() == "{\"base\":1,\"rows\":[[1]]}\n");

  a.n = 15;
  std::ostringstream fifteen;
  cmd_layers(a, fifteen);
  const auto lines = lines_of(fifteen.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == R"({"base":1,"rows":[[1,2,4,8],[3,6,12],[9]]})");

  a.n = 144;
  a.base = 1;
  a.format = Format::Csv;
  std::ostringstream csv;
  cmd_layers(a, csv);
  CHECK(lines_of(csv.str()).size() == 1 + 23);
}

TEST_CASE("duel summary") {
  DuelArgs a;
  a.n = 100;
  a.regime = Regime::RS1;
  const auto trace = std::filesystem::temp_directory_path() / "divsearch_trace_test.jsonl";
  a.trace_path = trace.string();
  std::ostringstream out;
  CHECK(cmd_duel(a, out) == 0);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j.at("comparisons").get<int>() >= 75);
  CHECK(j.at("regime") == "rs1");

  std::ifstream in(trace);
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("{\"q\":", 0) == 0);
  CHECK(first.find("\"a\":") != std::string::npos);
  std::filesystem::remove(trace);

  DuelArgs tiny;
  tiny.n = 1;
  tiny.regime = Regime::RS2;
  tiny.algo = Algorithm::Chains;
  std::ostringstream small;
  cmd_duel(tiny, small);
  CHECK(nlohmann::json::parse(small.str()).at("comparisons") == 1);
}

TEST_CASE("exact rows are sandwiched") {
  ExactArgs a;
  a.n_max = 8;
  std::ostringstream out;
  std::ostringstream notes;
  CHECK(cmd_exact(a, out, notes) == 0);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 9);
  CHECK(lines[0] == "n,tau,lower,upper");
  CHECK(lines[1] == "1,1,1,1");

  a.n_max = 13;
  CHECK_THROWS_AS(cmd_exact(a, out, notes), ContractViolation);
}

TEST_CASE("verify exit codes") {
  VerifyArgs a;
  a.suite = "all";
  a.n_max = 120;
  std::ostringstream out;
  CHECK(cmd_verify(a, out) == 0);
  CHECK(lines_of(out.str()).size() == 1 + suite_names().size());
  a.suite = "nonsense";
  CHECK_THROWS_AS(cmd_verify(a, out), ContractViolation);
}

TEST_CASE("bench output is deterministic") {
  BenchArgs a;
  a.n_list = {30, 200};
  a.seed = 5;
  std::ostringstream first;
  std::ostringstream second;
  cmd_bench(a, first);
  cmd_bench(a, second);
  CHECK(first.str() == second.str());
  CHECK(lines_of(first.str()).size() == 1 + 2 * 2 * 3);

  a.seed = 6;
  std::ostringstream other;
  cmd_bench(a, other);
  CHECK(other.str() != first.str());
}
