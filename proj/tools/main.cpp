#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace divsearch;
using namespace divsearch::cli;

namespace {

const std::vector<std::string> kRegimes{"rs1", "rs2", "rs2star"};
const std::vector<std::string> kAlgos{"chains", "table", "grid"};
const std::vector<std::string> kFormats{"csv", "json"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Membership search in tables ordered by divisibility"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format;

  LayersArgs layers;
  Subscript layers_base = 0;
  auto* c_layers = app.add_subcommand("layers", "Print the layer decomposition of 1..n");
  c_layers->add_option("--n", layers.n)->required();
  c_layers->add_option("--base", layers_base, "Only the layer with this base");

  BoundsArgs bounds;
  auto* c_bounds = app.add_subcommand("bounds", "Budgets and forced comparison counts");
  c_bounds->add_option("--n-list", bounds.n_list)->delimiter(',');

  VerifyArgs verify;
  Subscript verify_n_max = 0;
  auto* c_verify = app.add_subcommand("verify", "Run lemma and essentiality checks");
  c_verify->add_option("--suite", verify.suite)
      ->check(CLI::IsMember({"structural", "essential", "quotient", "witness", "all"}));
  c_verify->add_option("--n-max", verify_n_max);

  DuelArgs duel;
  std::string duel_regime = "rs2star";
  std::string duel_algo = "table";
  std::string duel_trace;
  auto* c_duel = app.add_subcommand("duel", "Run a search against the adversary");
  c_duel->add_option("--n", duel.n)->required();
  c_duel->add_option("--regime", duel_regime)->check(CLI::IsMember(kRegimes));
  c_duel->add_option("--algo", duel_algo)->check(CLI::IsMember(kAlgos));
  c_duel->add_option("--trace", duel_trace, "Write the transcript as JSON lines");

  ExactArgs exact;
  std::string tree_dir;
  auto* c_exact = app.add_subcommand("exact", "Exact optimal comparison counts for small n");
  c_exact->add_option("--n-max", exact.n_max);
  c_exact->add_option("--cap", exact.cap, "Largest n the solver accepts");
  c_exact->add_option("--trees", tree_dir, "Directory for optimal decision trees");

  BenchArgs bench;
  std::vector<std::string> bench_regimes;
  std::vector<std::string> bench_algos;
  std::string manifest;
  auto* c_bench = app.add_subcommand("bench", "Comparison counts on adversaries and random tables");
  c_bench->add_option("--n-list", bench.n_list)->delimiter(',');
  c_bench->add_option("--n", bench.n_list, "Single n, same as --n-list with one entry");
  c_bench->add_option("--regime", bench_regimes)->check(CLI::IsMember(kRegimes))->delimiter(',');
  c_bench->add_option("--algo", bench_algos)->check(CLI::IsMember(kAlgos))->delimiter(',');
  c_bench->add_option("--seed", bench.seed);
  c_bench->add_option("--tables", bench.tables, "Random tables per n");
  c_bench->add_option("--manifest", manifest, "Write the run manifest as JSON");

  for (auto* sub : app.get_subcommands({})) {
    sub->add_option("--out", out_path, "Write the report to this file instead of stdout");
    sub->add_option("--format", format, "Report format")->check(CLI::IsMember(kFormats));
  }

  CLI11_PARSE(app, argc, argv);

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << '\n';
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  try {
    if (*c_layers) {
      if (layers_base > 0) layers.base = layers_base;
      layers.format = format.empty() ? Format::Json : format_from_string(format);
      return cmd_layers(layers, out);
    }
    if (*c_bounds) {
      if (!format.empty()) bounds.format = format_from_string(format);
      return cmd_bounds(bounds, out);
    }
    if (*c_verify) {
      if (verify_n_max > 0) verify.n_max = verify_n_max;
      if (!format.empty()) verify.format = format_from_string(format);
      const int rc = cmd_verify(verify, out);
      if (rc != 0) std::cerr << "verify: violations found\n";
      return rc;
    }
    if (*c_duel) {
      duel.regime = regime_from_string(duel_regime);
      duel.algo = algorithm_from_string(duel_algo);
      if (!duel_trace.empty()) duel.trace_path = duel_trace;
      return cmd_duel(duel, out);
    }
    if (*c_exact) {
      if (!tree_dir.empty()) exact.tree_dir = tree_dir;
      if (!format.empty()) exact.format = format_from_string(format);
      return cmd_exact(exact, out, std::cerr);
    }
    if (*c_bench) {
      if (!bench_regimes.empty()) {
        bench.regimes.clear();
        for (const auto& r : bench_regimes) bench.regimes.push_back(regime_from_string(r));
      }
      if (!bench_algos.empty()) {
        bench.algos.clear();
        for (const auto& g : bench_algos) bench.algos.push_back(algorithm_from_string(g));
      }
      if (!manifest.empty()) bench.manifest_path = manifest;
      if (!format.empty()) bench.format = format_from_string(format);
      return cmd_bench(bench, out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
