#ifndef DIVSEARCH_TYPES_HPP
#define DIVSEARCH_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace divsearch {

// Index i of a table entry a_i, 1-based.
using Subscript = std::int64_t;

// Outcome of comparing the search key x against a_i.
enum class Answer : std::uint8_t {
  LT,  // x < a_i
  EQ,  // x = a_i
  GT,  // x > a_i
};

std::string_view to_string(Answer a);
Answer answer_from_string(std::string_view s);

// Response strategies of the adversary.
enum class Regime : std::uint8_t { RS1, RS2, RS2Star };

std::string_view to_string(Regime r);
Regime regime_from_string(std::string_view s);

// A caller broke a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An oracle produced an answer that no consistent table can realize.
class OracleFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool divides(Subscript d, Subscript k) { return k % d == 0; }

}  // namespace divsearch

#endif  // DIVSEARCH_TYPES_HPP
