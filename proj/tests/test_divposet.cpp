#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "divsearch/divposet.hpp"

using namespace divsearch;

namespace {

using Rows = std::vector<std::vector<Subscript>>;

// Layer by enumeration: every b * 3^s * 2^k <= n, grouped by s.
Rows enumerate_layer(Subscript b, Subscript n) {
  Rows rows;
  for (Subscript head = b; head <= n; head *= 3) {
    std::vector<Subscript> row;
    for (Subscript v = head; v <= n; v *= 2) row.push_back(v);
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::size_t> lengths_of(const Rows& rows) {
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.size());
  return out;
}

}  // namespace

TEST_CASE("chains of 1..15") {
  const auto chains = chain_partition(15);
  REQUIRE(chains.size() == 8);
  CHECK(chains[0].members == std::vector<Subscript>{1, 2, 4, 8});
  CHECK(chains[1].members == std::vector<Subscript>{3, 6, 12});
  CHECK(chains[2].members == std::vector<Subscript>{5, 10});
  CHECK(chains[3].members == std::vector<Subscript>{7, 14});
  for (std::size_t k = 4; k < chains.size(); ++k) CHECK(chains[k].members.size() == 1);
}

TEST_CASE("chains partition 1..n") {
  for (Subscript n : {1, 2, 17, 100, 1023}) {
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& c : chain_partition(n)) {
      CHECK(c.odd_part % 2 == 1);
      for (std::size_t k = 1; k < c.members.size(); ++k) {
        CHECK(c.members[k] == 2 * c.members[k - 1]);
      }
      for (auto v : c.members) ++seen[static_cast<std::size_t>(v)];
    }
    CHECK(std::count(seen.begin() + 1, seen.end(), 1) == n);
  }
}

TEST_CASE("layers of 1..15") {
  const auto layers = layer_decomposition(15);
  REQUIRE(layers.size() == 5);
  CHECK(layers[0].base == 1);
  CHECK(layers[0].rows == Rows{{1, 2, 4, 8}, {3, 6, 12}, {9}});
  CHECK(layers[1].rows == Rows{{5, 10}, {15}});
  CHECK(layers[2].rows == Rows{{7, 14}});
  CHECK(layers[3].rows == Rows{{11}});
  CHECK(layers[4].rows == Rows{{13}});
}

TEST_CASE("L_1 at n = 144") {
  const auto layer = make_layer(1, 144);
  CHECK(layer.row_lengths() == std::vector<std::size_t>{8, 6, 5, 3, 1});
  CHECK(layer.rows == enumerate_layer(1, 144));
  CHECK(layer.rows.back() == std::vector<Subscript>{81});
}

TEST_CASE("single cell at n = 1") {
  const auto layers = layer_decomposition(1);
  REQUIRE(layers.size() == 1);
  CHECK(layers[0].rows == Rows{{1}});
}

TEST_CASE("layers agree with enumeration and partition 1..n") {
  for (Subscript n = 1; n <= 400; ++n) {
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& l : layer_decomposition(n)) {
      REQUIRE(std::gcd(l.base, Subscript{6}) == 1);
      REQUIRE(l.rows == enumerate_layer(l.base, n));
      for (const auto& row : l.rows) {
        for (auto v : row) {
          ++seen[static_cast<std::size_t>(v)];
          CHECK(layer_base_of(v) == l.base);
        }
      }
    }
    REQUIRE(std::count(seen.begin() + 1, seen.end(), 1) == n);
  }
}

TEST_CASE("layer shape depends only on n / base") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Subscript> pick_n(1, 200000);
  for (int trial = 0; trial < 500; ++trial) {
    const Subscript n = pick_n(rng);
    Subscript b = std::uniform_int_distribution<Subscript>(1, n)(rng);
    while (std::gcd(b, Subscript{6}) != 1) --b;
    if (b < 1) continue;
    CHECK(layer_row_lengths(b, n) == layer_row_lengths(1, n / b));
  }
}

TEST_CASE("make_layer rejects bases sharing a factor with 6") {
  CHECK_THROWS_AS(make_layer(4, 20), ContractViolation);
  CHECK_THROWS_AS(make_layer(9, 20), ContractViolation);
}

TEST_CASE("special index sets on small cases") {
  CHECK(special_index_sets(288).s_n == std::vector<Subscript>{17});
  CHECK(special_index_sets(16).s_n == std::vector<Subscript>{1});
  CHECK(special_index_sets(100).s_n3.empty());
}

TEST_CASE("special index sets match their defining conditions") {
  auto brute = [](Subscript n) {
    SpecialIndexSets s;
    s.n = n;
    for (Subscript i = 1; i <= n; ++i) {
      // Real-number bounds checked with exact integer arithmetic.
      if (18 * i > n && 16 * i <= n && std::gcd(i, Subscript{6}) == 1) s.s_n.push_back(i);
      if (9 * i > n && 8 * i <= n && i % 2 == 0 && i % 3 != 0 && i % 4 != 0 && i % 5 != 0) {
        s.s_n1.push_back(i);
      }
      if (12 * i > n && 8 * i <= n && i % 4 == 0 && i % 3 != 0 && i % 5 != 0) s.s_n2.push_back(i);
      if (12 * i > n && 32 * i <= 3 * n && i % 4 == 0 && i % 9 == 0 && i % 5 != 0) {
        s.s_n3.push_back(i);
      }
    }
    return s;
  };
  for (Subscript n : {1, 16, 17, 144, 288, 1000, 3456, 4321, 10000}) {
    CAPTURE(n);
    const auto got = special_index_sets(n);
    const auto want = brute(n);
    CHECK(got.s_n == want.s_n);
    CHECK(got.s_n1 == want.s_n1);
    CHECK(got.s_n2 == want.s_n2);
    CHECK(got.s_n3 == want.s_n3);
  }
  CHECK_FALSE(special_index_sets(3456).s_n3.empty());
}

TEST_CASE("s_n bases are exactly the layers of size nine") {
  for (Subscript n = 1; n <= 3000; n += 7) {
    std::vector<Subscript> nine;
    for (const auto& l : layer_decomposition(n)) {
      if (l.size() == 9) nine.push_back(l.base);
    }
    CHECK(nine == special_index_sets(n).s_n);
  }
}

TEST_CASE("unit classes at n = 15") {
  const auto sets = special_index_sets(15);
  const auto units = classify_units(make_layer(1, 15), sets, Regime::RS2);
  REQUIRE(units.size() == 3);
  CHECK(units[0].members == std::vector<Subscript>{1, 2, 4, 8});
  CHECK(units[0].cls == UnitClass::U4General);
  CHECK(units[1].members == std::vector<Subscript>{3, 6, 12});
  CHECK(units[1].cls == UnitClass::U3_1);
  CHECK(units[2].cls == UnitClass::U1);

  const auto l5 = classify_units(make_layer(5, 15), sets, Regime::RS2);
  CHECK(l5[0].cls == UnitClass::U2);
  CHECK(l5[1].cls == UnitClass::U1);
}

TEST_CASE("special units by regime") {
  // L_17 at n = 288 has rows of length 5, 3, 1.
  const auto sets = special_index_sets(288);
  const auto layer = make_layer(17, 288);
  REQUIRE(layer.size() == 9);
  const auto rs2 = classify_units(layer, sets, Regime::RS2);
  CHECK(rs2[0].cls == UnitClass::U4S);
  CHECK(rs2[0].members == std::vector<Subscript>{34, 68, 136, 272});
  CHECK(classify_units(layer, sets, Regime::RS2Star)[0].cls == UnitClass::U4S1);

  const auto rs1 = classify_units(layer, sets, Regime::RS1);
  CHECK(rs1[0].members == std::vector<Subscript>{136, 272});
  CHECK(rs1[0].cls == UnitClass::U2);
  CHECK(rs1[2].cls == UnitClass::U1);
}

TEST_CASE("refined special units line up with their index sets") {
  for (Subscript n : {500, 2000, 3456, 9973}) {
    const UnitMap map(n, Regime::RS2Star);
    std::set<Subscript> s1;
    std::set<Subscript> s2;
    std::set<Subscript> s3;
    for (const auto& u : map.units()) {
      if (u.cls == UnitClass::U4S1) s1.insert(u.first());
      if (u.cls == UnitClass::U4S2) s2.insert(u.first());
      if (u.cls == UnitClass::U4S3) s3.insert(u.first());
    }
    const auto& sets = map.sets();
    CHECK(s1 == std::set<Subscript>(sets.s_n1.begin(), sets.s_n1.end()));
    CHECK(s2 == std::set<Subscript>(sets.s_n2.begin(), sets.s_n2.end()));
    CHECK(s3 == std::set<Subscript>(sets.s_n3.begin(), sets.s_n3.end()));
  }
}

TEST_CASE("unit map bookkeeping") {
  for (Regime r : {Regime::RS1, Regime::RS2, Regime::RS2Star}) {
    const UnitMap map(600, r);
    std::size_t members = 0;
    for (std::size_t u = 0; u < map.units().size(); ++u) {
      const auto& unit = map.units()[u];
      for (std::size_t k = 0; k < unit.members.size(); ++k) {
        CHECK(map.unit_of(unit.members[k]) == static_cast<std::int64_t>(u));
        CHECK(map.position_of(unit.members[k]) == static_cast<int>(k));
      }
      members += unit.members.size();
      CHECK(unit.members.size() <= (r == Regime::RS1 ? 2u : 4u));
    }
    Subscript outside = 0;
    for (Subscript i = 1; i <= 600; ++i) outside += map.unit_of(i) < 0 ? 1 : 0;
    CHECK(members + static_cast<std::size_t>(outside) == 600);
  }
}

TEST_CASE("row-length checker flags each pattern") {
  CHECK(check_row_lengths(1, {8, 6, 5, 3, 1}).empty());
  auto has = [](const std::vector<LemmaViolation>& v, const std::string& name) {
    return std::any_of(v.begin(), v.end(), [&](const auto& x) { return x.lemma == name; });
  };
  CHECK(has(check_row_lengths(1, {6, 3}), "row-difference"));
  CHECK(has(check_row_lengths(1, {6, 5, 4}), "no-three-rows-plus-one"));
  CHECK(has(check_row_lengths(1, {7, 5, 3, 1}), "no-four-rows-plus-two"));
  CHECK_FALSE(has(check_row_lengths(1, {7, 5, 3}), "no-four-rows-plus-two"));
}

TEST_CASE("structural and quotient lemmas hold at moderate n") {
  CHECK(check_structural_lemmas(20000).empty());
  CHECK(check_quotient_lemmas(5000).empty());
  for (Subscript n = 1; n <= 1500; ++n) REQUIRE(check_special_first_members(n).empty());
}
