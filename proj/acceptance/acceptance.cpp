// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
// Pass a list of criterion numbers to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "divsearch/adversary.hpp"
#include "divsearch/answer_walk.hpp"
#include "divsearch/duel.hpp"
#include "divsearch/exact.hpp"
#include "divsearch/search.hpp"
#include "divsearch/tablegen.hpp"
#include "divsearch/verify.hpp"
#include "support/faulty.hpp"

using namespace divsearch;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

constexpr Subscript kLargeN[] = {1000, 10000, 100000, 1000000};

// Worst case of search_table on one layer shape, found by walking every
// consistent answer sequence. L_1 at m stands for every layer L_b with
// n / b = m: inside a layer divisibility is the grid order.
class LayerWalks {
 public:
  std::size_t worst(Subscript m) {
    auto it = by_m_.find(m);
    if (it != by_m_.end()) return it->second;
    const auto layer = make_layer(1, m);
    const auto shape = layer.row_lengths();
    auto cached = by_shape_.find(shape);
    std::size_t w = 0;
    if (cached != by_shape_.end()) {
      w = cached->second;
    } else {
      WalkOptions opts;
      for (const auto& row : layer.rows) opts.scope.insert(opts.scope.end(), row.begin(), row.end());
      const bool grid = uses_grid_search(layer.size());
      const auto rep = walk_answer_tree(
          m,
          [&](ComparisonOracle& o) {
            return grid ? search_monotone_grid(StaircaseView::whole(layer.rows), o)
                        : search_layer(layer, o);
          },
          opts);
      unjustified_ += rep.unjustified_leaves;
      w = rep.max_comparisons;
      by_shape_.emplace(shape, w);
      layers_.push_back(layer);
    }
    by_m_.emplace(m, w);
    return w;
  }

  std::size_t unjustified() const { return unjustified_; }
  const std::vector<LayerGrid>& walked() const { return layers_; }
  std::size_t worst_of(const LayerGrid& l) const { return by_shape_.at(l.row_lengths()); }

 private:
  std::map<Subscript, std::size_t> by_m_;
  std::map<std::vector<std::size_t>, std::size_t> by_shape_;
  std::vector<LayerGrid> layers_;
  std::size_t unjustified_ = 0;
};

LayerWalks& layer_walks() {
  static LayerWalks walks;
  return walks;
}

Verdict criterion_1() {
  std::size_t runs = 0;
  std::size_t wrong = 0;
  for (Subscript n = 1; n <= 200; ++n) {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto table = random_table(n, seed);
      for (Value x : probe_values(table)) {
        const auto truth = find_value(table, x);
        for (Algorithm a : {Algorithm::Chains, Algorithm::Table}) {
          TableOracle oracle(table, x);
          const auto out = run_search(a, n, oracle);
          ++runs;
          if (out.found != truth.has_value() || (truth && out.match != truth)) ++wrong;
        }
      }
    }
  }
  return {wrong == 0, fmt("%zu searches on random tables, %zu wrong", runs, wrong)};
}

Verdict criterion_2() {
  bool ok = true;
  std::string detail;
  for (Subscript n : kLargeN) {
    const double ln = std::log(static_cast<double>(n));
    const double bound = 55.0 * static_cast<double>(n) / 72.0 + 10.0 * ln * ln + 20.0;
    const auto s2 = budget_s2(n);
    ok = ok && static_cast<double>(s2) <= bound;
    detail += fmt("s2(%lld)=%zu<=%.1f ", static_cast<long long>(n), s2, bound);
  }

  // search_table visits layers one after another, so its worst case over all
  // answer sequences is the sum of per-layer worst cases.
  auto& walks = layer_walks();
  std::size_t over = 0;
  std::size_t tightest_gap = SIZE_MAX;
  for (Subscript n = 1; n <= 2000; ++n) {
    std::size_t total = 0;
    for (const auto& l : layer_decomposition(n)) total += walks.worst(n / l.base);
    if (total > budget_s2(n)) ++over;
    tightest_gap = std::min(tightest_gap, budget_s2(n) - std::min(total, budget_s2(n)));
  }
  // Direct whole-table walks where they are still small.
  std::size_t direct_over = 0;
  for (Subscript n = 1; n <= 12; ++n) {
    const auto rep = walk_answer_tree(n, [&](ComparisonOracle& o) { return search_table(n, o); });
    if (rep.max_comparisons > budget_s2(n) || rep.unjustified_leaves) ++direct_over;
  }
  // Adversarial duels at every n.
  std::size_t duel_over = 0;
  for (Subscript n = 1; n <= 2000; ++n) {
    for (Regime r : {Regime::RS1, Regime::RS2, Regime::RS2Star}) {
      if (duel(n, r, Algorithm::Table).outcome.comparisons > budget_s2(n)) ++duel_over;
    }
  }
  ok = ok && over == 0 && direct_over == 0 && duel_over == 0 && walks.unjustified() == 0;
  detail += fmt("| walks n<=2000: %zu over budget (min slack %zu), whole-table n<=12: %zu, "
                "duels: %zu, unjustified leaves: %zu",
                over, tightest_gap, direct_over, duel_over, walks.unjustified());
  return {ok, detail};
}

Verdict criterion_3() {
  auto& walks = layer_walks();
  for (Subscript m = 1; m <= 2000; ++m) walks.worst(m);
  std::size_t checked = 0;
  std::size_t over = 0;
  for (const auto& l : walks.walked()) {
    if (uses_grid_search(l.size())) continue;
    ++checked;
    if (walks.worst_of(l) > l.row_count() + l.column_count() - 2) ++over;
  }
  return {over == 0 && walks.unjustified() == 0,
          fmt("%zu layer shapes with |L| not in {1,2,3,5}, %zu exceed m+n-2", checked, over)};
}

Verdict criterion_4() {
  const auto essential = verify_essential(10000);
  const auto witnesses = verify_witness(2000);
  return {essential.passed() && witnesses.passed(),
          fmt("essentiality n<=10000: %zu violations; witnesses n<=2000: %zu pinned, %zu failed",
              essential.violations.size(), witnesses.checks, witnesses.violations.size())};
}

Verdict criterion_5() {
  const Subscript n = 1000000;
  const double c1 = static_cast<double>(forced_comparison_count(n, Regime::RS2Star)) / 1e6;
  const double c2 = static_cast<double>(budget_s2(n)) / 1e6;
  const bool ok = std::abs(c1 - 0.75787) <= 5e-4 && std::abs(c2 - 0.76389) <= 1e-3;
  return {ok, fmt("forced_rs2s/n=%.6f (target 0.75787+-5e-4), s2/n=%.6f (target 0.76389+-1e-3)",
                  c1, c2)};
}

Verdict criterion_6() {
  bool ok = true;
  std::string detail;
  for (Subscript n : kLargeN) {
    const auto sets = special_index_sets(n);
    const double dn = static_cast<double>(n);
    const double d1 = std::abs(static_cast<double>(sets.s_n.size()) - dn / 432.0);
    const double d2 = std::abs(static_cast<double>(sets.refined_total()) - 17.0 * dn / 2160.0);
    ok = ok && d1 <= 4 && d2 <= 8;
    detail += fmt("n=%lld |S|=%zu (dev %.2f) refined=%zu (dev %.2f vs 17n/2160, %.2f vs 11n/1440); ",
                  static_cast<long long>(n), sets.s_n.size(), d1, sets.refined_total(), d2,
                  std::abs(static_cast<double>(sets.refined_total()) - 11.0 * dn / 1440.0));
  }
  return {ok, detail};
}

Verdict criterion_7() {
  const auto shapes = verify_structural(100000);
  const auto quotients = verify_quotient(10000);
  return {shapes.passed() && quotients.passed(),
          fmt("row-length lemmas n<=100000: %zu violations; quotient and 12i>n lemmas n<=10000: "
              "%zu violations",
              shapes.violations.size(), quotients.violations.size())};
}

Verdict criterion_8() {
  bool ok = true;
  std::string taus;
  std::size_t replays = 0;
  std::size_t wrong = 0;
  for (Subscript n = 1; n <= 10; ++n) {
    const auto tau = static_cast<std::size_t>(tau_exact(n));
    std::size_t lower = 0;
    for (Regime r : {Regime::RS1, Regime::RS2, Regime::RS2Star}) {
      lower = std::max(lower, forced_comparison_count(n, r));
    }
    std::size_t upper = SIZE_MAX;
    for (Algorithm a : {Algorithm::Chains, Algorithm::Table}) {
      const auto rep = walk_answer_tree(n, [&](ComparisonOracle& o) { return run_search(a, n, o); });
      upper = std::min(upper, rep.max_comparisons);
    }
    ok = ok && lower <= tau && tau <= upper;
    taus += fmt("%s%zu", n == 1 ? "" : ",", tau);

    const auto tree = optimal_tree(n);
    ok = ok && tree.depth() == tau;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
      const auto table = random_table(n, seed);
      for (Value x : probe_values(table)) {
        const auto v = tree.evaluate(table, x);
        ++replays;
        if (v.found != find_value(table, x).has_value() || v.comparisons > tau) ++wrong;
      }
    }
  }
  return {ok && wrong == 0,
          fmt("tau(1..10)=%s within [forced, walked worst]; %zu tree replays, %zu wrong",
              taus.c_str(), replays, wrong)};
}

Verdict criterion_9() {
  std::size_t refuted = 0;
  std::size_t total = 0;
  for (const auto& algo : testing::faulty_algorithms()) {
    for (Subscript n : {50, 100, 500}) {
      ++total;
      Adversary adv(n, Regime::RS2Star);
      const auto out = algo.run(n, adv);
      const auto verdict = refute_early_stop(n, Regime::RS2Star, adv.transcript(), out.found);
      const auto* r = std::get_if<Refutation>(&verdict);
      if (r != nullptr && r->pinned && !adv.transcript().decided(*r->pinned) &&
          realizes(r->witness, adv.transcript().constraints()) &&
          r->witness.table.at(*r->pinned) == r->witness.x) {
        ++refuted;
      }
    }
  }
  return {refuted == total, fmt("%zu of %zu faulty runs refuted with a verified pinned witness",
                                refuted, total)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4}, {5, criterion_5},
      {6, criterion_6}, {7, criterion_7}, {8, criterion_8}, {9, criterion_9}};
  std::set<int> wanted;
  for (int k = 1; k < argc; ++k) wanted.insert(std::atoi(argv[k]));

  int failed = 0;
  for (const auto& [id, run] : criteria) {
    if (!wanted.empty() && !wanted.count(id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s (%.1fs) %s\n", id, v.pass ? "PASS" : "FAIL", secs, v.detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
