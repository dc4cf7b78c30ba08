#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "divsearch/adversary.hpp"
#include "divsearch/duel.hpp"
#include "divsearch/exact.hpp"
#include "divsearch/tablegen.hpp"
#include "divsearch/verify.hpp"

namespace divsearch::cli {

using nlohmann::ordered_json;

namespace {

// Rows with named columns, written as CSV with a header or as a JSON array.
class Report {
 public:
  explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  template <class... Cells>
  void add(const Cells&... cells) {
    static_assert(sizeof...(Cells) > 0);
    if (sizeof...(Cells) != columns_.size()) throw std::logic_error("report: column count mismatch");
    auto& row = rows_.emplace_back();
    (row.push_back(ordered_json(cells)), ...);
  }

  void write(std::ostream& out, Format f) const {
    if (f == Format::Json) {
      ordered_json arr = ordered_json::array();
      for (const auto& row : rows_) {
        ordered_json obj;
        for (std::size_t c = 0; c < columns_.size(); ++c) obj[columns_[c]] = row[c];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      return;
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) out << (c ? "," : "") << columns_[c];
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << cell(row[c]);
      out << '\n';
    }
  }

 private:
  static std::string cell(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_float()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", v.get<double>());
      return buf;
    }
    return v.dump();
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<ordered_json>> rows_;
};

void require_positive(Subscript n, const char* what) {
  if (n < 1) throw ContractViolation(std::string(what) + " must be >= 1");
}

}  // namespace

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ContractViolation("unknown format '" + s + "'");
}

int cmd_layers(const LayersArgs& a, std::ostream& out) {
  require_positive(a.n, "--n");
  std::vector<LayerGrid> layers;
  if (a.base) {
    layers.push_back(make_layer(*a.base, a.n));
  } else {
    layers = layer_decomposition(a.n);
  }
  if (a.format == Format::Json) {
    // One layer per line.
    for (const auto& l : layers) {
      ordered_json j;
      j["base"] = l.base;
      j["rows"] = l.rows;
      out << j.dump() << '\n';
    }
    return 0;
  }
  out << "base,row,col,subscript\n";
  for (const auto& l : layers) {
    for (std::size_t r = 0; r < l.rows.size(); ++r) {
      for (std::size_t c = 0; c < l.rows[r].size(); ++c) {
        out << l.base << ',' << r << ',' << c << ',' << l.rows[r][c] << '\n';
      }
    }
  }
  return 0;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
  Report rep({"n", "s1", "s2", "f_rs1", "f_rs2", "f_rs2s", "r_s2", "r_rs2s"});
  for (Subscript n : a.n_list) {
    require_positive(n, "--n-list entries");
    const auto s2 = budget_s2(n);
    const auto f_rs2s = forced_comparison_count(n, Regime::RS2Star);
    const double dn = static_cast<double>(n);
    rep.add(n, budget_s1(n), s2, forced_comparison_count(n, Regime::RS1),
            forced_comparison_count(n, Regime::RS2), f_rs2s, static_cast<double>(s2) / dn,
            static_cast<double>(f_rs2s) / dn);
  }
  rep.write(out, a.format);
  return 0;
}

Subscript default_n_max(const std::string& suite) {
  if (suite == "structural") return 100000;
  if (suite == "essential" || suite == "quotient") return 10000;
  if (suite == "witness") return 2000;
  throw ContractViolation("unknown suite '" + suite + "'");
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> suites;
  if (a.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(a.suite);
  }
  std::vector<SuiteReport> reports;
  for (const auto& s : suites) reports.push_back(run_suite(s, a.n_max.value_or(default_n_max(s))));

  bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (a.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
      arr.push_back({{"suite", r.suite},
                     {"n_max", r.n_max},
                     {"checks", r.checks},
                     {"status", r.passed() ? "PASS" : "FAIL"},
                     {"violations", r.violations}});
    }
    out << arr.dump(2) << '\n';
  } else {
    out << "suite,n_max,checks,status,violation\n";
    for (const auto& r : reports) {
      if (r.passed()) {
        out << r.suite << ',' << r.n_max << ',' << r.checks << ",PASS,\n";
      }
      for (const auto& v : r.violations) {
        out << r.suite << ',' << r.n_max << ',' << r.checks << ",FAIL," << v << '\n';
      }
    }
  }
  return ok ? 0 : 1;
}

int cmd_duel(const DuelArgs& a, std::ostream& out) {
  require_positive(a.n, "--n");
  const auto r = duel(a.n, a.regime, a.algo);
  ordered_json j;
  j["n"] = r.n;
  j["regime"] = std::string(to_string(r.regime));
  j["algo"] = std::string(to_string(r.algorithm));
  j["found"] = r.outcome.found;
  j["comparisons"] = r.outcome.comparisons;
  j["forced"] = r.forced;
  j["budget"] = r.budget;
  j["confirmed"] = r.confirmed;
  j["lower_bound_holds"] = r.lower_bound_holds;
  out << j.dump() << '\n';
  if (a.trace_path) {
    std::ofstream trace(*a.trace_path);
    if (!trace) throw std::runtime_error("cannot open " + *a.trace_path);
    for (const auto& q : r.transcript) {
      ordered_json line;
      line["q"] = q.subscript;
      line["a"] = std::string(to_string(q.answer));
      trace << line.dump() << '\n';
    }
  }
  return r.confirmed && r.lower_bound_holds ? 0 : 1;
}

int cmd_exact(const ExactArgs& a, std::ostream& out, std::ostream& notes) {
  require_positive(a.n_max, "--n-max");
  ExactOptions opts;
  opts.cap = a.cap;
  Report rep({"n", "tau", "lower", "upper"});
  bool ok = true;
  int previous = 0;
  for (Subscript n = 1; n <= a.n_max; ++n) {
    const int tau = tau_exact(n, opts);
    std::size_t lower = 0;
    for (Regime r : {Regime::RS1, Regime::RS2, Regime::RS2Star}) {
      lower = std::max(lower, forced_comparison_count(n, r));
    }
    const std::size_t upper =
        std::min({budget_s2(n), budget_s1(n), static_cast<std::size_t>(n)});
    rep.add(n, tau, lower, upper);
    if (lower > static_cast<std::size_t>(tau) || static_cast<std::size_t>(tau) > upper) {
      ok = false;
      notes << "violation: n=" << n << " lower=" << lower << " tau=" << tau << " upper=" << upper
            << '\n';
    }
    if (tau < previous) notes << "note: tau(" << n << ") < tau(" << n - 1 << ")\n";
    previous = tau;
    if (a.tree_dir) {
      std::filesystem::create_directories(*a.tree_dir);
      const auto path = std::filesystem::path(*a.tree_dir) / ("tree_" + std::to_string(n) + ".json");
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot open " + path.string());
      f << optimal_tree(n, opts).to_json().dump() << '\n';
    }
  }
  rep.write(out, a.format);
  return ok ? 0 : 1;
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  constexpr std::size_t kProbeLimit = 257;
  Report rep({"n", "algo", "regime", "adversary", "forced", "budget", "table_max", "table_mean"});
  for (Subscript n : a.n_list) {
    require_positive(n, "--n-list entries");
    for (Algorithm algo : a.algos) {
      // Concrete tables do not depend on the regime; measured once per algo.
      std::size_t table_max = 0;
      std::size_t total = 0;
      std::size_t runs = 0;
      for (std::size_t k = 0; k < a.tables; ++k) {
        const auto table = random_table(n, a.seed + k);
        const auto probes = probe_values(table);
        const std::size_t stride = std::max<std::size_t>(1, probes.size() / kProbeLimit);
        for (std::size_t p = 0; p < probes.size(); p += stride) {
          TableOracle oracle(table, probes[p]);
          const auto outcome = run_search(algo, n, oracle);
          table_max = std::max(table_max, outcome.comparisons);
          total += outcome.comparisons;
          ++runs;
        }
      }
      const double mean = runs ? static_cast<double>(total) / static_cast<double>(runs) : 0.0;
      for (Regime regime : a.regimes) {
        const auto d = duel(n, regime, algo);
        rep.add(n, std::string(to_string(algo)), std::string(to_string(regime)),
                d.outcome.comparisons, d.forced, d.budget, table_max, mean);
      }
    }
  }
  rep.write(out, a.format);

  if (a.manifest_path) {
    ordered_json m;
    m["n_list"] = a.n_list;
    ordered_json regimes = ordered_json::array();
    for (auto r : a.regimes) regimes.push_back(std::string(to_string(r)));
    ordered_json algos = ordered_json::array();
    for (auto g : a.algos) algos.push_back(std::string(to_string(g)));
    m["regimes"] = regimes;
    m["algorithms"] = algos;
    m["seeds"] = ordered_json::array();
    for (std::size_t k = 0; k < a.tables; ++k) m["seeds"].push_back(a.seed + k);
    m["probe_limit"] = kProbeLimit;
    std::ofstream f(*a.manifest_path);
    if (!f) throw std::runtime_error("cannot open " + *a.manifest_path);
    f << m.dump(2) << '\n';
  }
  return 0;
}

}  // namespace divsearch::cli
