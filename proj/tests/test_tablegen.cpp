#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "divsearch/adversary.hpp"
#include "divsearch/tablegen.hpp"
#include "support/faulty.hpp"

using namespace divsearch;

namespace {

TranscriptConstraints make_constraints(Subscript n, std::vector<Subscript> gt,
                                       std::vector<Subscript> lt) {
  TranscriptConstraints c;
  c.n = n;
  c.gt_set = std::move(gt);
  c.lt_set = std::move(lt);
  return c;
}

// An edge u -> v of the constraint graph, with 0 standing for x.
bool is_edge(const TranscriptConstraints& c, Subscript u, Subscript v) {
  auto in = [](const std::vector<Subscript>& s, Subscript i) {
    return std::find(s.begin(), s.end(), i) != s.end();
  };
  if (u == 0) return in(c.lt_set, v);
  if (v == 0) return in(c.gt_set, u);
  return u != v && v % u == 0;
}

}  // namespace

TEST_CASE("random tables are consistent and reproducible") {
  for (Subscript n : {1, 2, 30, 500}) {
    const auto a = random_table(n, 42);
    CHECK(is_consistent(a));
    CHECK(a.values == random_table(n, 42).values);
    auto sorted = a.values;
    std::sort(sorted.begin() + 1, sorted.end());
    for (Subscript i = 1; i <= n; ++i) CHECK(sorted[static_cast<std::size_t>(i)] == 2 * i);
  }
  CHECK(random_table(200, 1).values != random_table(200, 2).values);
}

TEST_CASE("consistency check catches inversions and ties") {
  ConsistentTable t;
  t.values = {0, 2, 4, 6};
  CHECK(is_consistent(t));
  t.values = {0, 4, 2, 6};  // a_1 > a_2
  CHECK_FALSE(is_consistent(t));
  t.values = {0, 2, 6, 6};  // a_2 = a_3
  CHECK_FALSE(is_consistent(t));
}

TEST_CASE("probe values cover every region") {
  const auto t = random_table(10, 3);
  const auto probes = probe_values(t);
  CHECK(probes.size() == 21);
  CHECK(probes.front() == 1);
  CHECK(probes.back() == 21);
  CHECK(std::is_sorted(probes.begin(), probes.end()));
}

TEST_CASE("witness for a feasible transcript at n = 4") {
  // x above a_2, below a_3.
  const auto c = make_constraints(4, {2}, {3});
  const auto w = witness(4, c);
  REQUIRE(std::holds_alternative<Witness>(w));
  const auto& wt = std::get<Witness>(w);
  CHECK(realizes(wt, c));
  CHECK(wt.table.at(2) < wt.x);
  CHECK(wt.x < wt.table.at(3));
  CHECK_FALSE(find_value(wt.table, wt.x).has_value());

  const auto pinned = witness(4, c, 4);
  REQUIRE(std::holds_alternative<Witness>(pinned));
  CHECK(std::get<Witness>(pinned).table.at(4) == std::get<Witness>(pinned).x);
  CHECK(realizes(std::get<Witness>(pinned), c));
}

TEST_CASE("infeasible transcripts come with a cycle") {
  // x > a_4 > a_2 > x.
  const auto c = make_constraints(4, {4}, {2});
  const auto w = witness(4, c);
  REQUIRE(std::holds_alternative<Infeasible>(w));
  const auto& cycle = std::get<Infeasible>(w).cycle;
  REQUIRE(cycle.size() >= 2);
  CHECK(std::find(cycle.begin(), cycle.end(), 0) != cycle.end());
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    CHECK(is_edge(c, cycle[k], cycle[(k + 1) % cycle.size()]));
  }

  // Pinning x to a_1 while x > a_2 is also impossible.
  CHECK(std::holds_alternative<Infeasible>(witness(4, make_constraints(4, {2}, {}), 1)));
}

TEST_CASE("equality constraint and pin must agree") {
  auto c = make_constraints(6, {}, {});
  c.eq = 3;
  CHECK(std::holds_alternative<Witness>(witness(6, c, 3)));
  CHECK(std::holds_alternative<Infeasible>(witness(6, c, 5)));
}

TEST_CASE("witnesses from adversary transcripts") {
  for (Subscript n : {10, 77, 300}) {
    Adversary adv(n, Regime::RS2Star);
    for (Subscript i = n; i >= 1; i -= 3) adv.compare(i);
    const auto c = adv.transcript().constraints();
    const auto w = witness(n, c);
    REQUIRE(std::holds_alternative<Witness>(w));
    CHECK(realizes(std::get<Witness>(w), c));
  }
}

TEST_CASE("table CSV round trip") {
  const auto t = random_table(25, 9);
  std::stringstream ss;
  write_table_csv(ss, t);
  CHECK(ss.str().rfind("subscript,value\n", 0) == 0);
  CHECK(read_table_csv(ss).values == t.values);

  std::stringstream bad("subscript,value\n2,5\n");
  CHECK_THROWS(read_table_csv(bad));
}

TEST_CASE("early stops are refuted with a pinned witness") {
  for (const auto& algo : testing::faulty_algorithms()) {
    for (Subscript n : {50, 100}) {
      CAPTURE(algo.name);
      CAPTURE(n);
      Adversary adv(n, Regime::RS2Star);
      const auto out = algo.run(n, adv);
      REQUIRE_FALSE(out.found);
      const auto verdict = refute_early_stop(n, Regime::RS2Star, adv.transcript(), false);
      REQUIRE(std::holds_alternative<Refutation>(verdict));
      const auto& r = std::get<Refutation>(verdict);
      REQUIRE(r.pinned.has_value());
      CHECK_FALSE(adv.transcript().decided(*r.pinned));
      CHECK(realizes(r.witness, adv.transcript().constraints()));
      CHECK(r.witness.table.at(*r.pinned) == r.witness.x);
    }
  }
}

TEST_CASE("complete searches are confirmed") {
  for (Subscript n : {1, 50, 100}) {
    Adversary adv(n, Regime::RS2);
    const auto out = search_table(n, adv);
    CHECK(std::holds_alternative<Confirmed>(
        refute_early_stop(n, Regime::RS2, adv.transcript(), out.found)));
  }
}

TEST_CASE("a found claim without an equality is refuted") {
  Adversary adv(20, Regime::RS2);
  adv.compare(20);
  const auto verdict = refute_early_stop(20, Regime::RS2, adv.transcript(), true);
  REQUIRE(std::holds_alternative<Refutation>(verdict));
  const auto& r = std::get<Refutation>(verdict);
  CHECK_FALSE(r.pinned.has_value());
  CHECK_FALSE(find_value(r.witness.table, r.witness.x).has_value());
}
