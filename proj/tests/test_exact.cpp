#include <doctest.h>

#include <algorithm>
#include <map>

#include "divsearch/adversary.hpp"
#include "divsearch/answer_walk.hpp"
#include "divsearch/exact.hpp"

using namespace divsearch;

namespace {

// Plain minimax over status vectors (0 unknown, 1 below x, 2 above x),
// without pruning or bit tricks.
class NaiveMinimax {
 public:
  explicit NaiveMinimax(int n) : n_(n) {}

  int solve() { return value(std::vector<int>(static_cast<std::size_t>(n_) + 1, 0)); }

 private:
  int value(const std::vector<int>& s) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    int best = -1;
    for (int i = 1; i <= n_; ++i) {
      if (s[static_cast<std::size_t>(i)] != 0) continue;
      auto below = s;
      for (int d = 1; d <= i; ++d) {
        if (i % d == 0) below[static_cast<std::size_t>(d)] = 1;
      }
      auto above = s;
      for (int m = i; m <= n_; m += i) above[static_cast<std::size_t>(m)] = 2;
      const int cost = 1 + std::max(value(below), value(above));
      if (best < 0 || cost < best) best = cost;
    }
    if (best < 0) best = 0;
    memo_[s] = best;
    return best;
  }

  int n_;
  std::map<std::vector<int>, int> memo_;
};

}  // namespace

TEST_CASE("smallest values") {
  CHECK(tau_exact(1) == 1);
  CHECK(tau_exact(2) == 2);
  CHECK(tau_exact(3) == 3);
}

TEST_CASE("agrees with a naive minimax") {
  for (int n = 1; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(tau_exact(n) == NaiveMinimax(n).solve());
  }
}

TEST_CASE("memoization does not change values") {
  for (Subscript n = 1; n <= 6; ++n) {
    ExactOptions plain;
    plain.memoize = false;
    CHECK(tau_exact(n, plain) == tau_exact(n));
  }
}

TEST_CASE("cap is enforced with an explanation") {
  CHECK_THROWS_WITH_AS(tau_exact(13), doctest::Contains("cap"), ContractViolation);
  ExactOptions wide;
  wide.cap = 14;
  CHECK(tau_exact(13, wide) >= tau_exact(12));
  wide.cap = 64;
  CHECK_THROWS_AS(tau_exact(31, wide), ContractViolation);
}

TEST_CASE("sandwich between forced counts and algorithm walks") {
  for (Subscript n = 1; n <= 10; ++n) {
    CAPTURE(n);
    const auto tau = static_cast<std::size_t>(tau_exact(n));
    for (Regime r : {Regime::RS1, Regime::RS2, Regime::RS2Star}) {
      CHECK(forced_comparison_count(n, r) <= tau);
    }
    for (Algorithm a : {Algorithm::Chains, Algorithm::Table}) {
      const auto walk = walk_answer_tree(n, [&](ComparisonOracle& o) { return run_search(a, n, o); });
      CHECK(tau <= walk.max_comparisons);
    }
  }
}

TEST_CASE("tree export") {
  SUBCASE("n = 1 is one query") {
    const auto t = optimal_tree(1);
    REQUIRE(t.nodes.size() == 1);
    CHECK(t.to_json().dump() == R"({"q":1,"lt":"NOT_FOUND","eq":"FOUND","gt":"NOT_FOUND"})");
  }
  SUBCASE("n = 2") {
    const auto t = optimal_tree(2);
    CHECK(t.depth() == 2);
    CHECK((t.nodes[0].query == 1 || t.nodes[0].query == 2));
  }
  SUBCASE("depth matches the optimum") {
    for (Subscript n = 1; n <= 10; ++n) {
      CHECK(optimal_tree(n).depth() == static_cast<std::size_t>(tau_exact(n)));
    }
  }
  SUBCASE("export is deterministic") {
    CHECK(optimal_tree(9).to_json().dump() == optimal_tree(9).to_json().dump());
  }
}

TEST_CASE("optimal trees replay correctly on random tables") {
  for (Subscript n = 1; n <= 8; ++n) {
    const auto tree = optimal_tree(n);
    const auto tau = static_cast<std::size_t>(tau_exact(n));
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      const auto table = random_table(n, seed);
      for (Value x : probe_values(table)) {
        const auto v = tree.evaluate(table, x);
        REQUIRE(v.found == find_value(table, x).has_value());
        REQUIRE(v.comparisons <= tau);
      }
    }
  }
}

TEST_CASE("knowledge states close under divisibility") {
  ExactSolver s(12);
  const auto after_gt = s.after({}, 12, Answer::GT);
  CHECK(after_gt.below == 0b100000101111u);  // 1, 2, 3, 4, 6, 12
  const auto after_lt = s.after({}, 3, Answer::LT);
  CHECK(after_lt.above == 0b100100100100u);  // 3, 6, 9, 12
  CHECK(s.candidates(after_lt) == 0b011011011011u);
  CHECK_THROWS_AS(s.after({}, 4, Answer::EQ), ContractViolation);
}
