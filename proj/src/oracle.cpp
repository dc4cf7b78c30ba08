#include "divsearch/oracle.hpp"

#include <string>

#include <json.hpp>

namespace divsearch {

Transcript::Transcript(Subscript n)
    : n_(n),
      answer_(static_cast<std::size_t>(n < 1 ? 1 : n) + 1, kNone),
      below_(static_cast<std::size_t>(n < 1 ? 1 : n) + 1, 0) {
  if (n < 1) throw ContractViolation("table size must be >= 1");
}

std::size_t Transcript::index(Subscript i) const {
  if (i < 1 || i > n_) {
    throw ContractViolation("subscript " + std::to_string(i) + " outside 1.." +
                            std::to_string(n_));
  }
  return static_cast<std::size_t>(i);
}

std::optional<Answer> Transcript::answer_for(Subscript i) const {
  const auto a = answer_[index(i)];
  if (a == kNone) return std::nullopt;
  return static_cast<Answer>(a);
}

bool Transcript::known_above(Subscript i) const {
  bool above = false;
  for_each_divisor(i, [&](Subscript d) {
    const auto a = answer_[static_cast<std::size_t>(d)];
    if (a == static_cast<std::uint8_t>(Answer::LT)) above = true;
    if (a == static_cast<std::uint8_t>(Answer::EQ) && d != i) above = true;
  });
  return above;
}

bool Transcript::decided(Subscript i) const {
  return queried(i) || known_below(i) || known_above(i);
}

bool Transcript::admits(Subscript i, Answer a) const {
  if (queried(i)) return false;
  switch (a) {
    case Answer::GT: return !known_above(i);
    case Answer::LT: return !known_below(i);
    case Answer::EQ: return !eq_ && !known_below(i) && !known_above(i);
  }
  return false;
}

void Transcript::mark_below_closure(Subscript i) {
  // below_ is kept down-closed, so a marked node has marked divisors.
  std::vector<Subscript> stack{i};
  while (!stack.empty()) {
    const Subscript v = stack.back();
    stack.pop_back();
    if (below_[static_cast<std::size_t>(v)]) continue;
    below_[static_cast<std::size_t>(v)] = 1;
    Subscript rest = v;
    for (Subscript p = 2; p * p <= rest; ++p) {
      if (rest % p != 0) continue;
      while (rest % p == 0) rest /= p;
      if (!below_[static_cast<std::size_t>(v / p)]) stack.push_back(v / p);
    }
    if (rest > 1 && !below_[static_cast<std::size_t>(v / rest)]) stack.push_back(v / rest);
  }
}

void Transcript::record(Subscript i, Answer a) {
  const auto idx = index(i);
  if (answer_[idx] != kNone) {
    throw ContractViolation("subscript " + std::to_string(i) + " queried twice");
  }
  if (!admits(i, a)) {
    throw OracleFault("answer " + std::string(to_string(a)) + " for subscript " +
                      std::to_string(i) + " contradicts earlier answers");
  }
  answer_[idx] = static_cast<std::uint8_t>(a);
  entries_.push_back({i, a});
  if (a == Answer::GT) {
    mark_below_closure(i);
  } else if (a == Answer::EQ) {
    eq_ = i;
    for_each_divisor(i, [&](Subscript d) {
      if (d != i) mark_below_closure(d);
    });
  }
}

TranscriptConstraints Transcript::constraints() const {
  TranscriptConstraints c;
  c.n = n_;
  for (const auto& e : entries_) {
    if (e.answer == Answer::GT) c.gt_set.push_back(e.subscript);
    if (e.answer == Answer::LT) c.lt_set.push_back(e.subscript);
    if (e.answer == Answer::EQ) c.eq = e.subscript;
  }
  return c;
}

Answer ComparisonOracle::compare(Subscript i) {
  if (i < 1 || i > table_size()) {
    throw ContractViolation("query " + std::to_string(i) + " outside 1.." +
                            std::to_string(table_size()));
  }
  if (transcript_.queried(i)) {
    throw ContractViolation("subscript " + std::to_string(i) + " queried twice");
  }
  const Answer a = respond(i);
  transcript_.record(i, a);
  return a;
}

void write_trace(std::ostream& os, const Transcript& t) {
  for (const auto& e : t.entries()) {
    nlohmann::ordered_json line = {{"q", e.subscript}, {"a", to_string(e.answer)}};
    os << line.dump() << '\n';
  }
}

}  // namespace divsearch
