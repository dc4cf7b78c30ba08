#ifndef DIVSEARCH_DIVPOSET_HPP
#define DIVSEARCH_DIVPOSET_HPP

// Structure of {1..n} under divisibility: chains of the form j*2^k, layers of
// the form b*2^k*3^s, and the per-row units the adversary strategies act on.
// Everything here is a pure function of n.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "divsearch/types.hpp"

namespace divsearch {

struct Chain {
  Subscript odd_part = 1;
  std::vector<Subscript> members;  // odd_part * 2^k <= n, increasing
};

std::vector<Chain> chain_partition(Subscript n);

// Layer L_b for b coprime to 6: row s holds b*3^s*2^k for k = 0, 1, ...
// Rows are stored top (s = 0) to bottom, each increasing left to right.
struct LayerGrid {
  Subscript base = 1;
  Subscript n = 1;
  std::vector<std::vector<Subscript>> rows;

  std::size_t size() const;
  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }
  std::vector<std::size_t> row_lengths() const;
};

// Strips the factors 2 and 3; the result names the layer holding i.
Subscript layer_base_of(Subscript i);

// floor(log2(n / (base * 3^s))) + 1 for every s with base * 3^s <= n.
std::vector<std::size_t> layer_row_lengths(Subscript base, Subscript n);

LayerGrid make_layer(Subscript base, Subscript n);

// Layers ordered by increasing base.
std::vector<LayerGrid> layer_decomposition(Subscript n);

enum class UnitClass : std::uint8_t {
  U1,
  U2,
  U3_1,  // 3-unit whose next row down has one element
  U3_2,  // 3-unit whose next row down has two elements
  U4General,
  U4S,   // 4-unit of a nine-element layer (RS2)
  U4S1,  // nine-element layer, base not divisible by 5 (RS2*)
  U4S2,  // first row, >= 6 long, two longer than the second row (RS2*)
  U4S3,  // row with +2 above and -2 below, first member divisible by 36 (RS2*)
};

std::string to_string(UnitClass c);
bool is_special(UnitClass c);

struct UnitDescriptor {
  Subscript layer_base = 1;
  std::size_t row_index = 0;
  std::vector<Subscript> members;  // increasing; 1 to 4 entries
  UnitClass cls = UnitClass::U1;

  Subscript first() const { return members.front(); }
};

// Sorted index sets behind the special units. s_n is keyed by layer base;
// s_n1 by the first member 2i of the unit; s_n2 and s_n3 by the first member.
struct SpecialIndexSets {
  Subscript n = 1;
  std::vector<Subscript> s_n;
  std::vector<Subscript> s_n1;
  std::vector<Subscript> s_n2;
  std::vector<Subscript> s_n3;

  std::size_t refined_total() const { return s_n1.size() + s_n2.size() + s_n3.size(); }
};

SpecialIndexSets special_index_sets(Subscript n);

// Raised when the row-shape classification of a unit disagrees with the
// subscript-range description of the same class.
class ClassificationMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// One unit per row, top to bottom. RS1 uses the last two elements of each
// row (classes U1/U2); RS2 and RS2Star use the last four.
std::vector<UnitDescriptor> classify_units(const LayerGrid& grid, const SpecialIndexSets& sets,
                                           Regime regime);

struct LemmaViolation {
  std::string lemma;
  Subscript a = 0;  // layer base, or divisor for quotient lemmas
  Subscript b = 0;  // multiple for quotient lemmas, else 0
  std::string detail;
};

// Row-length lemmas for one layer shape: consecutive differences are 1 or 2,
// never two +1 steps in a row, never three +2 steps in a row.
std::vector<LemmaViolation> check_row_lengths(Subscript base,
                                              const std::vector<std::size_t>& lengths);

std::vector<LemmaViolation> check_structural_lemmas(Subscript n);

// For j1 | j2 with j1 != j2 in different layers: j2 / j1 >= 5, and >= 7 when
// 5 does not divide j2. Covers all pairs inside {1..n}.
std::vector<LemmaViolation> check_quotient_lemmas(Subscript n);

// First member i of every RS2* special unit satisfies 12 i > n.
std::vector<LemmaViolation> check_special_first_members(Subscript n);

// Per-subscript view of one regime's unit partition of {1..n}.
class UnitMap {
 public:
  UnitMap(Subscript n, Regime regime);

  Subscript size() const { return n_; }
  Regime regime() const { return regime_; }
  const SpecialIndexSets& sets() const { return sets_; }
  const std::vector<UnitDescriptor>& units() const { return units_; }

  // Index into units(), or -1 when i belongs to no unit.
  std::int64_t unit_of(Subscript i) const { return unit_of_[static_cast<std::size_t>(i)]; }
  // Position of i inside its unit, -1 when not in a unit.
  int position_of(Subscript i) const { return position_[static_cast<std::size_t>(i)]; }
  bool same_unit(Subscript i, Subscript j) const {
    return unit_of(i) >= 0 && unit_of(i) == unit_of(j);
  }

  // Fault injection: forces a unit's class regardless of its shape.
  void override_class(std::size_t unit, UnitClass cls) { units_.at(unit).cls = cls; }

 private:
  Subscript n_;
  Regime regime_;
  SpecialIndexSets sets_;
  std::vector<UnitDescriptor> units_;
  std::vector<std::int64_t> unit_of_;
  std::vector<std::int8_t> position_;
};

}  // namespace divsearch

#endif  // DIVSEARCH_DIVPOSET_HPP
