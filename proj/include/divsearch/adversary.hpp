#ifndef DIVSEARCH_ADVERSARY_HPP
#define DIVSEARCH_ADVERSARY_HPP

// Response strategies for the adversary, the cut relation, and the sets of
// essential elements whose comparisons every correct search must spend.

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "divsearch/divposet.hpp"
#include "divsearch/oracle.hpp"

namespace divsearch {

// A GT answer (x > a_i) cuts every divisor of i: the element cuts to the
// left up. An LT answer cuts every multiple: it cuts to the right bottom.
enum class Direction : std::uint8_t { LeftUp, RightBottom };

Answer answer_for(Direction d);
Direction direction_for(Answer a);

// Which answers a strategy may give for one element over all query orders.
struct DirectionSet {
  bool left_up = false;
  bool right_bottom = false;

  bool allows(Direction d) const { return d == Direction::LeftUp ? left_up : right_bottom; }
  bool operator==(const DirectionSet&) const = default;
};

// Elements cut by an answer on a_i: proper multiples for RightBottom,
// proper divisors for LeftUp. Sorted.
std::vector<Subscript> cut_set(Subscript i, Direction d, Subscript n);

// Adaptive strategy on a special unit {w, 2w, 4w, 8w}. The first probe
// inside the unit fixes the answers for the remaining members.
class SpecialUnitState {
 public:
  enum class Phase : std::uint8_t { Fresh, AfterFirst };

  explicit SpecialUnitState(std::array<Subscript, 4> members) : members_(members) {}

  Answer respond(int position);

  Phase phase() const { return phase_; }
  int first_probed() const { return first_; }
  const std::array<Subscript, 4>& members() const { return members_; }

  // Union over all probe orders: {GT}, {GT, LT}, {GT, LT}, {LT}.
  static DirectionSet possible(int position);

 private:
  std::array<Subscript, 4> members_;
  Phase phase_ = Phase::Fresh;
  int first_ = -1;
  std::array<Answer, 4> plan_{};
};

// Fixed answer of a general unit member, by class and position.
Answer template_answer(UnitClass cls, int position);

// Answers available to the strategy for element i.
DirectionSet possible_directions(const UnitMap& units, Subscript i);

class Adversary final : public ComparisonOracle {
 public:
  Adversary(Subscript n, Regime regime);

  Regime regime() const { return units_.regime(); }
  const UnitMap& units() const { return units_; }
  const std::map<std::int64_t, SpecialUnitState>& special_states() const { return special_; }

 protected:
  Answer respond(Subscript i) override;

 private:
  UnitMap units_;
  std::map<std::int64_t, SpecialUnitState> special_;
};

// Whether the member at this position of a unit of this class is essential.
bool is_essential_position(UnitClass cls, int position, Regime regime);

struct EssentialSet {
  Regime regime = Regime::RS2;
  std::vector<Subscript> subscripts;  // sorted

  bool contains(Subscript i) const;
};

EssentialSet essential_set(const UnitMap& units);
EssentialSet essential_set(Subscript n, Regime regime);

struct EssentialityViolation {
  Subscript cutter = 0;
  Direction direction = Direction::LeftUp;
  Subscript victim = 0;
};

// Every essential element checked against every element outside its unit and
// every direction that element may take. Empty when the strategy is sound.
std::vector<EssentialityViolation> verify_essentiality(const UnitMap& units);
std::vector<EssentialityViolation> verify_essentiality(Subscript n, Regime regime);

// Comparisons the strategy forces on any correct search: one per 1-element
// row, two per other row, three per special-unit row (RS1: n - floor(n/4)).
std::size_t forced_comparison_count(Subscript n, Regime regime);
std::size_t forced_comparison_count(const UnitMap& units);

}  // namespace divsearch

#endif  // DIVSEARCH_ADVERSARY_HPP
