#ifndef DIVSEARCH_TOOLS_COMMANDS_HPP
#define DIVSEARCH_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "divsearch/search.hpp"
#include "divsearch/types.hpp"

namespace divsearch::cli {

enum class Format { Csv, Json };

Format format_from_string(const std::string& s);

struct LayersArgs {
  Subscript n = 1;
  std::optional<Subscript> base;
  Format format = Format::Json;
};

struct BoundsArgs {
  std::vector<Subscript> n_list{1000, 10000, 100000, 1000000};
  Format format = Format::Csv;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<Subscript> n_max;  // per-suite default when absent
  Format format = Format::Csv;
};

struct DuelArgs {
  Subscript n = 1;
  Regime regime = Regime::RS2Star;
  Algorithm algo = Algorithm::Table;
  std::optional<std::string> trace_path;
};

struct ExactArgs {
  Subscript n_max = 10;
  Subscript cap = 12;
  std::optional<std::string> tree_dir;
  Format format = Format::Csv;
};

struct BenchArgs {
  std::vector<Subscript> n_list{100, 1000, 10000};
  std::vector<Regime> regimes{Regime::RS1, Regime::RS2, Regime::RS2Star};
  std::vector<Algorithm> algos{Algorithm::Chains, Algorithm::Table};
  std::uint64_t seed = 1;
  std::size_t tables = 3;
  Format format = Format::Csv;
  std::optional<std::string> manifest_path;
};

// Each command writes its report to out and returns the process exit code.
int cmd_layers(const LayersArgs& a, std::ostream& out);
int cmd_bounds(const BoundsArgs& a, std::ostream& out);
int cmd_verify(const VerifyArgs& a, std::ostream& out);
int cmd_duel(const DuelArgs& a, std::ostream& out);
int cmd_exact(const ExactArgs& a, std::ostream& out, std::ostream& notes);
int cmd_bench(const BenchArgs& a, std::ostream& out);

Subscript default_n_max(const std::string& suite);

}  // namespace divsearch::cli

#endif  // DIVSEARCH_TOOLS_COMMANDS_HPP
