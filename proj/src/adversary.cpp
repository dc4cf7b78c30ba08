#include "divsearch/adversary.hpp"

#include <algorithm>
#include <string>

namespace divsearch {

Answer answer_for(Direction d) { return d == Direction::LeftUp ? Answer::GT : Answer::LT; }

Direction direction_for(Answer a) {
  if (a == Answer::EQ) throw ContractViolation("EQ has no cut direction");
  return a == Answer::GT ? Direction::LeftUp : Direction::RightBottom;
}

std::vector<Subscript> cut_set(Subscript i, Direction d, Subscript n) {
  if (i < 1 || i > n) throw ContractViolation("subscript outside 1..n");
  std::vector<Subscript> out;
  if (d == Direction::RightBottom) {
    for (Subscript k = 2 * i; k <= n; k += i) out.push_back(k);
  } else {
    for_each_divisor(i, [&](Subscript k) {
      if (k != i) out.push_back(k);
    });
    std::sort(out.begin(), out.end());
  }
  return out;
}

Answer SpecialUnitState::respond(int position) {
  if (position < 0 || position > 3) throw ContractViolation("special unit position out of range");
  if (phase_ == Phase::Fresh) {
    phase_ = Phase::AfterFirst;
    first_ = position;
    // Members already eliminated by the first answer keep the answer that
    // elimination implies.
    switch (position) {
      case 0: plan_ = {Answer::GT, Answer::GT, Answer::LT, Answer::LT}; break;
      case 1: plan_ = {Answer::GT, Answer::GT, Answer::GT, Answer::LT}; break;
      case 2: plan_ = {Answer::GT, Answer::LT, Answer::LT, Answer::LT}; break;
      default: plan_ = {Answer::GT, Answer::GT, Answer::LT, Answer::LT}; break;
    }
  }
  return plan_[static_cast<std::size_t>(position)];
}

DirectionSet SpecialUnitState::possible(int position) {
  switch (position) {
    case 0: return {true, false};
    case 1:
    case 2: return {true, true};
    case 3: return {false, true};
  }
  throw ContractViolation("special unit position out of range");
}

Answer template_answer(UnitClass cls, int position) {
  static constexpr Answer G = Answer::GT;
  static constexpr Answer L = Answer::LT;
  auto pick = [&](std::initializer_list<Answer> answers) {
    if (position < 0 || position >= static_cast<int>(answers.size())) {
      throw ContractViolation("position outside unit of class " + to_string(cls));
    }
    return answers.begin()[position];
  };
  switch (cls) {
    case UnitClass::U1: return pick({L});
    case UnitClass::U2: return pick({G, L});
    case UnitClass::U3_1: return pick({G, L, L});
    case UnitClass::U3_2: return pick({G, G, L});
    case UnitClass::U4General: return pick({G, G, L, L});
    default: break;
  }
  throw ContractViolation("special units have no fixed answers");
}

DirectionSet possible_directions(const UnitMap& units, Subscript i) {
  if (units.regime() == Regime::RS1) {
    return i <= units.size() / 2 ? DirectionSet{true, false} : DirectionSet{false, true};
  }
  const auto id = units.unit_of(i);
  if (id < 0) return {true, false};
  const auto& u = units.units()[static_cast<std::size_t>(id)];
  const int pos = units.position_of(i);
  if (is_special(u.cls)) return SpecialUnitState::possible(pos);
  return template_answer(u.cls, pos) == Answer::GT ? DirectionSet{true, false}
                                                   : DirectionSet{false, true};
}

Adversary::Adversary(Subscript n, Regime regime) : ComparisonOracle(n), units_(n, regime) {}

Answer Adversary::respond(Subscript i) {
  if (units_.regime() == Regime::RS1) return i <= units_.size() / 2 ? Answer::GT : Answer::LT;
  const auto id = units_.unit_of(i);
  if (id < 0) return Answer::GT;
  const auto& u = units_.units()[static_cast<std::size_t>(id)];
  const int pos = units_.position_of(i);
  if (!is_special(u.cls)) return template_answer(u.cls, pos);
  auto it = special_.find(id);
  if (it == special_.end()) {
    it = special_
             .emplace(id, SpecialUnitState({u.members[0], u.members[1], u.members[2],
                                            u.members[3]}))
             .first;
  }
  return it->second.respond(pos);
}

bool is_essential_position(UnitClass cls, int position, Regime regime) {
  if (regime == Regime::RS1 || is_special(cls)) return true;
  switch (cls) {
    case UnitClass::U1:
    case UnitClass::U2: return true;
    case UnitClass::U3_1: return position == 0 || position == 1;
    case UnitClass::U3_2:
    case UnitClass::U4General: return position == 1 || position == 2;
    default: return false;
  }
}

bool EssentialSet::contains(Subscript i) const {
  return std::binary_search(subscripts.begin(), subscripts.end(), i);
}

EssentialSet essential_set(const UnitMap& units) {
  EssentialSet e;
  e.regime = units.regime();
  for (const auto& u : units.units()) {
    for (std::size_t k = 0; k < u.members.size(); ++k) {
      if (is_essential_position(u.cls, static_cast<int>(k), units.regime())) {
        e.subscripts.push_back(u.members[k]);
      }
    }
  }
  std::sort(e.subscripts.begin(), e.subscripts.end());
  return e;
}

EssentialSet essential_set(Subscript n, Regime regime) { return essential_set(UnitMap(n, regime)); }

std::vector<EssentialityViolation> verify_essentiality(const UnitMap& units) {
  const Subscript n = units.size();
  std::vector<std::uint8_t> essential(static_cast<std::size_t>(n) + 1, 0);
  for (Subscript e : essential_set(units).subscripts) essential[static_cast<std::size_t>(e)] = 1;
  std::vector<DirectionSet> dirs(static_cast<std::size_t>(n) + 1);
  for (Subscript i = 1; i <= n; ++i) dirs[static_cast<std::size_t>(i)] = possible_directions(units, i);

  // Every cut is a divisor pair lo | hi: hi answering GT cuts lo, lo
  // answering LT cuts hi. Walking the pairs once covers both cut sets.
  std::vector<EssentialityViolation> out;
  for (Subscript lo = 1; lo <= n; ++lo) {
    const auto lo_idx = static_cast<std::size_t>(lo);
    for (Subscript hi = 2 * lo; hi <= n; hi += lo) {
      const auto hi_idx = static_cast<std::size_t>(hi);
      if (units.same_unit(lo, hi)) continue;
      if (essential[lo_idx] && dirs[hi_idx].left_up) {
        out.push_back({hi, Direction::LeftUp, lo});
      }
      if (essential[hi_idx] && dirs[lo_idx].right_bottom) {
        out.push_back({lo, Direction::RightBottom, hi});
      }
    }
  }
  return out;
}

std::vector<EssentialityViolation> verify_essentiality(Subscript n, Regime regime) {
  return verify_essentiality(UnitMap(n, regime));
}

std::size_t forced_comparison_count(const UnitMap& units) {
  if (units.regime() == Regime::RS1) {
    return static_cast<std::size_t>(units.size() - units.size() / 4);
  }
  std::size_t total = 0;
  for (const auto& u : units.units()) {
    if (is_special(u.cls)) {
      total += 3;
    } else {
      total += u.members.size() == 1 ? 1 : 2;
    }
  }
  return total;
}

std::size_t forced_comparison_count(Subscript n, Regime regime) {
  if (n < 1) throw ContractViolation("table size must be >= 1");
  if (regime == Regime::RS1) return static_cast<std::size_t>(n - n / 4);
  return forced_comparison_count(UnitMap(n, regime));
}

}  // namespace divsearch
