#include "divsearch/types.hpp"

#include <string>

namespace divsearch {

std::string_view to_string(Answer a) {
  switch (a) {
    case Answer::LT: return "LT";
    case Answer::EQ: return "EQ";
    case Answer::GT: return "GT";
  }
  return "?";
}

Answer answer_from_string(std::string_view s) {
  if (s == "LT") return Answer::LT;
  if (s == "EQ") return Answer::EQ;
  if (s == "GT") return Answer::GT;
  throw std::invalid_argument("unknown answer: " + std::string(s));
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::RS1: return "rs1";
    case Regime::RS2: return "rs2";
    case Regime::RS2Star: return "rs2star";
  }
  return "?";
}

Regime regime_from_string(std::string_view s) {
  if (s == "rs1") return Regime::RS1;
  if (s == "rs2") return Regime::RS2;
  if (s == "rs2star") return Regime::RS2Star;
  throw std::invalid_argument("unknown regime: " + std::string(s));
}

}  // namespace divsearch
