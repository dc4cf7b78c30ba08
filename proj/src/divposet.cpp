#include "divsearch/divposet.hpp"

#include <algorithm>
#include <sstream>

namespace divsearch {

namespace {

void require_size(Subscript n) {
  if (n < 1) throw ContractViolation("table size must be >= 1, got " + std::to_string(n));
}

bool contains(const std::vector<Subscript>& sorted, Subscript v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::string lengths_string(const std::vector<std::size_t>& lengths) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < lengths.size(); ++k) os << (k ? "," : "") << lengths[k];
  os << ']';
  return os.str();
}

}  // namespace

std::vector<Chain> chain_partition(Subscript n) {
  require_size(n);
  std::vector<Chain> chains;
  chains.reserve(static_cast<std::size_t>((n + 1) / 2));
  for (Subscript odd = 1; odd <= n; odd += 2) {
    Chain c;
    c.odd_part = odd;
    for (Subscript v = odd; v <= n; v *= 2) c.members.push_back(v);
    chains.push_back(std::move(c));
  }
  return chains;
}

std::size_t LayerGrid::size() const {
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  return total;
}

std::vector<std::size_t> LayerGrid::row_lengths() const {
  std::vector<std::size_t> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.size());
  return out;
}

Subscript layer_base_of(Subscript i) {
  while (i % 2 == 0) i /= 2;
  while (i % 3 == 0) i /= 3;
  return i;
}

std::vector<std::size_t> layer_row_lengths(Subscript base, Subscript n) {
  std::vector<std::size_t> lengths;
  for (Subscript head = base; head <= n; head *= 3) {
    std::size_t len = 0;
    for (Subscript v = head; v <= n; v *= 2) ++len;
    lengths.push_back(len);
  }
  return lengths;
}

LayerGrid make_layer(Subscript base, Subscript n) {
  require_size(n);
  if (base < 1 || base > n || base % 2 == 0 || base % 3 == 0) {
    throw ContractViolation("layer base must be in 1..n and coprime to 6, got " +
                            std::to_string(base));
  }
  LayerGrid g;
  g.base = base;
  g.n = n;
  for (Subscript head = base; head <= n; head *= 3) {
    std::vector<Subscript> row;
    for (Subscript v = head; v <= n; v *= 2) row.push_back(v);
    g.rows.push_back(std::move(row));
  }
  return g;
}

std::vector<LayerGrid> layer_decomposition(Subscript n) {
  require_size(n);
  std::vector<LayerGrid> layers;
  layers.reserve(static_cast<std::size_t>(n / 3 + 1));
  for (Subscript b = 1; b <= n; ++b) {
    if (b % 2 != 0 && b % 3 != 0) layers.push_back(make_layer(b, n));
  }
  return layers;
}

std::string to_string(UnitClass c) {
  switch (c) {
    case UnitClass::U1: return "U1";
    case UnitClass::U2: return "U2";
    case UnitClass::U3_1: return "U3_1";
    case UnitClass::U3_2: return "U3_2";
    case UnitClass::U4General: return "U4_GENERAL";
    case UnitClass::U4S: return "U4_S";
    case UnitClass::U4S1: return "U4_S1";
    case UnitClass::U4S2: return "U4_S2";
    case UnitClass::U4S3: return "U4_S3";
  }
  return "?";
}

bool is_special(UnitClass c) {
  return c == UnitClass::U4S || c == UnitClass::U4S1 || c == UnitClass::U4S2 ||
         c == UnitClass::U4S3;
}

SpecialIndexSets special_index_sets(Subscript n) {
  require_size(n);
  SpecialIndexSets s;
  s.n = n;
  // Bounds are kept in integer form: n/18 < i <= n/16 is 18i > n && 16i <= n.
  for (Subscript i = 1; 16 * i <= n; ++i) {
    if (18 * i > n && i % 2 != 0 && i % 3 != 0) s.s_n.push_back(i);
  }
  for (Subscript j = 1; 8 * j <= n; ++j) {
    if (9 * j > n && j % 4 == 2 && j % 3 != 0 && j % 5 != 0) s.s_n1.push_back(j);
  }
  for (Subscript i = 1; 8 * i <= n; ++i) {
    if (12 * i > n && i % 4 == 0 && i % 3 != 0 && i % 5 != 0) s.s_n2.push_back(i);
  }
  for (Subscript i = 1; 32 * i <= 3 * n; ++i) {
    if (12 * i > n && i % 36 == 0 && i % 5 != 0) s.s_n3.push_back(i);
  }
  return s;
}

std::vector<UnitDescriptor> classify_units(const LayerGrid& grid, const SpecialIndexSets& sets,
                                           Regime regime) {
  if (sets.n != grid.n) throw ContractViolation("index sets and layer built for different n");
  const auto lengths = grid.row_lengths();
  const std::size_t rows = lengths.size();
  const std::size_t unit_width = regime == Regime::RS1 ? 2 : 4;
  const bool nine = grid.size() == 9;
  const bool no_five = grid.base % 5 != 0;

  std::vector<UnitDescriptor> units;
  units.reserve(rows);
  for (std::size_t s = 0; s < rows; ++s) {
    const auto& row = grid.rows[s];
    const std::size_t len = row.size();
    const std::size_t take = std::min(unit_width, len);
    UnitDescriptor u;
    u.layer_base = grid.base;
    u.row_index = s;
    u.members.assign(row.end() - static_cast<std::ptrdiff_t>(take), row.end());

    const std::size_t below = s + 1 < rows ? lengths[s + 1] : 0;
    const std::size_t above = s > 0 ? lengths[s - 1] : 0;
    if (len == 1) {
      u.cls = UnitClass::U1;
    } else if (len == 2 || regime == Regime::RS1) {
      u.cls = UnitClass::U2;
    } else if (len == 3) {
      if (below == 1) {
        u.cls = UnitClass::U3_1;
      } else if (below == 2) {
        u.cls = UnitClass::U3_2;
      } else {
        throw ClassificationMismatch("3-unit in layer " + std::to_string(grid.base) +
                                     " has a next row of length " + std::to_string(below));
      }
    } else if (regime == Regime::RS2) {
      u.cls = nine ? UnitClass::U4S : UnitClass::U4General;
    } else {
      u.cls = UnitClass::U4General;
      if (no_five) {
        if (nine) {
          u.cls = UnitClass::U4S1;
        } else if (s == 0 && len >= 6 && below + 2 == len) {
          u.cls = UnitClass::U4S2;
        } else if (s >= 2 && len >= 6 && above == len + 2 && below + 2 == len) {
          u.cls = UnitClass::U4S3;
        }
      }
    }

    if (u.members.size() == 4) {
      const Subscript w = u.first();
      bool shape = false;
      bool listed = false;
      const char* set_name = "";
      auto check = [&](bool by_shape, bool by_set, const char* name) {
        if (by_shape != by_set) {
          shape = by_shape;
          listed = by_set;
          set_name = name;
          return false;
        }
        return true;
      };
      bool ok = true;
      if (regime == Regime::RS2) {
        ok = check(u.cls == UnitClass::U4S, contains(sets.s_n, grid.base), "S_n");
      } else {
        ok = check(u.cls == UnitClass::U4S1, contains(sets.s_n1, w), "S_n1") &&
             check(u.cls == UnitClass::U4S2, contains(sets.s_n2, w), "S_n2") &&
             check(u.cls == UnitClass::U4S3, contains(sets.s_n3, w), "S_n3");
      }
      if (!ok) {
        std::ostringstream os;
        os << "unit starting at " << w << " (layer " << grid.base << ", row " << s
           << ", n=" << grid.n << "): shape says " << (shape ? "in " : "not in ") << set_name
           << ", index set says " << (listed ? "in" : "not in");
        throw ClassificationMismatch(os.str());
      }
    }
    units.push_back(std::move(u));
  }
  return units;
}

std::vector<LemmaViolation> check_row_lengths(Subscript base,
                                              const std::vector<std::size_t>& lengths) {
  std::vector<LemmaViolation> out;
  auto report = [&](const char* lemma) {
    out.push_back({lemma, base, 0, "row lengths " + lengths_string(lengths)});
  };
  int run_one = 0;
  int run_two = 0;
  for (std::size_t s = 0; s + 1 < lengths.size(); ++s) {
    const auto upper = static_cast<std::int64_t>(lengths[s]);
    const auto lower = static_cast<std::int64_t>(lengths[s + 1]);
    const std::int64_t diff = upper - lower;
    if (diff != 1 && diff != 2) report("row-difference");
    run_one = diff == 1 ? run_one + 1 : 0;
    run_two = diff == 2 ? run_two + 1 : 0;
    if (run_one == 2) report("no-three-rows-plus-one");
    if (run_two == 3) report("no-four-rows-plus-two");
  }
  return out;
}

std::vector<LemmaViolation> check_structural_lemmas(Subscript n) {
  require_size(n);
  std::vector<LemmaViolation> out;
  for (Subscript b = 1; b <= n; ++b) {
    if (b % 2 == 0 || b % 3 == 0) continue;
    auto v = check_row_lengths(b, layer_row_lengths(b, n));
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<LemmaViolation> check_quotient_lemmas(Subscript n) {
  require_size(n);
  std::vector<Subscript> base(static_cast<std::size_t>(n) + 1, 0);
  for (Subscript i = 1; i <= n; ++i) base[static_cast<std::size_t>(i)] = layer_base_of(i);
  std::vector<LemmaViolation> out;
  for (Subscript lo = 1; lo <= n; ++lo) {
    for (Subscript hi = 2 * lo; hi <= n; hi += lo) {
      if (base[static_cast<std::size_t>(lo)] == base[static_cast<std::size_t>(hi)]) continue;
      const Subscript q = hi / lo;
      if (q < 5) out.push_back({"quotient-at-least-5", lo, hi, "quotient " + std::to_string(q)});
      if (hi % 5 != 0 && q < 7) {
        out.push_back({"quotient-at-least-7", lo, hi, "quotient " + std::to_string(q)});
      }
    }
  }
  return out;
}

std::vector<LemmaViolation> check_special_first_members(Subscript n) {
  const UnitMap map(n, Regime::RS2Star);
  std::vector<LemmaViolation> out;
  for (const auto& u : map.units()) {
    if (is_special(u.cls) && 12 * u.first() <= n) {
      out.push_back({"twelve-i-exceeds-n", u.first(), 0, to_string(u.cls)});
    }
  }
  return out;
}

UnitMap::UnitMap(Subscript n, Regime regime)
    : n_(n),
      regime_(regime),
      sets_(special_index_sets(n)),
      unit_of_(static_cast<std::size_t>(n) + 1, -1),
      position_(static_cast<std::size_t>(n) + 1, -1) {
  for (Subscript b = 1; b <= n; ++b) {
    if (b % 2 == 0 || b % 3 == 0) continue;
    for (auto& u : classify_units(make_layer(b, n), sets_, regime)) {
      const auto id = static_cast<std::int64_t>(units_.size());
      for (std::size_t k = 0; k < u.members.size(); ++k) {
        const auto idx = static_cast<std::size_t>(u.members[k]);
        unit_of_[idx] = id;
        position_[idx] = static_cast<std::int8_t>(k);
      }
      units_.push_back(std::move(u));
    }
  }
}

}  // namespace divsearch
