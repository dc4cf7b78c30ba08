#ifndef DIVSEARCH_ORACLE_HPP
#define DIVSEARCH_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "divsearch/types.hpp"

namespace divsearch {

struct QueryRecord {
  Subscript subscript = 0;
  Answer answer = Answer::LT;

  bool operator==(const QueryRecord&) const = default;
};

// The answers of a transcript in constraint form.
struct TranscriptConstraints {
  Subscript n = 1;
  std::vector<Subscript> gt_set;  // x > a_i
  std::vector<Subscript> lt_set;  // x < a_i
  std::optional<Subscript> eq;    // x = a_i
};

// Calls f(d) for every divisor d of k, including 1 and k.
template <class F>
void for_each_divisor(Subscript k, F&& f) {
  Subscript d = 1;
  for (; d * d < k; ++d) {
    if (k % d == 0) {
      f(d);
      f(k / d);
    }
  }
  if (d * d == k) f(d);
}

// Ordered record of comparisons against x, with the closure of what they
// imply about every a_i. Rejects answers no consistent table can produce.
class Transcript {
 public:
  explicit Transcript(Subscript n);

  Subscript table_size() const { return n_; }
  const std::vector<QueryRecord>& entries() const { return entries_; }
  std::size_t count() const { return entries_.size(); }

  bool queried(Subscript i) const { return answer_[index(i)] != kNone; }
  std::optional<Answer> answer_for(Subscript i) const;

  // a_i < x follows from the answers so far.
  bool known_below(Subscript i) const { return below_[index(i)] != 0; }
  // a_i > x follows from the answers so far.
  bool known_above(Subscript i) const;
  // x = a_i is ruled out or confirmed.
  bool decided(Subscript i) const;

  // Whether recording (i, a) keeps the transcript realizable.
  bool admits(Subscript i, Answer a) const;

  // Throws ContractViolation on a repeated or out-of-range subscript and
  // OracleFault when the answer contradicts earlier ones.
  void record(Subscript i, Answer a);

  TranscriptConstraints constraints() const;

 private:
  static constexpr std::uint8_t kNone = 0xff;

  std::size_t index(Subscript i) const;
  void mark_below_closure(Subscript i);

  Subscript n_;
  std::vector<std::uint8_t> answer_;
  std::vector<std::uint8_t> below_;
  std::optional<Subscript> eq_;
  std::vector<QueryRecord> entries_;
};

// A source of answers to x : a_i. Every comparison goes through compare(),
// which counts it and validates it against the transcript.
class ComparisonOracle {
 public:
  explicit ComparisonOracle(Subscript n) : transcript_(n) {}
  virtual ~ComparisonOracle() = default;

  ComparisonOracle(const ComparisonOracle&) = delete;
  ComparisonOracle& operator=(const ComparisonOracle&) = delete;

  Answer compare(Subscript i);

  Subscript table_size() const { return transcript_.table_size(); }
  std::size_t comparisons() const { return transcript_.count(); }
  const Transcript& transcript() const { return transcript_; }

 protected:
  virtual Answer respond(Subscript i) = 0;

 private:
  Transcript transcript_;
};

// One JSON object per line: {"q": subscript, "a": "LT|EQ|GT"}.
void write_trace(std::ostream& os, const Transcript& t);

}  // namespace divsearch

#endif  // DIVSEARCH_ORACLE_HPP
