#ifndef DIVSEARCH_TABLEGEN_HPP
#define DIVSEARCH_TABLEGEN_HPP

// Concrete tables consistent with divisibility, and witness tables that
// realize a transcript. Values are integers; random tables use the even
// numbers 2, 4, ..., 2n so every odd number is a probe between entries.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "divsearch/adversary.hpp"
#include "divsearch/oracle.hpp"

namespace divsearch {

using Value = std::int64_t;

struct ConsistentTable {
  std::vector<Value> values;  // values[0] unused

  Subscript size() const { return static_cast<Subscript>(values.size()) - 1; }
  Value at(Subscript i) const { return values.at(static_cast<std::size_t>(i)); }
};

// i | j, i != j  =>  a_i < a_j, and all values distinct.
bool is_consistent(const ConsistentTable& t);

// Values by a random topological order of the divisibility order.
ConsistentTable random_table(Subscript n, std::uint64_t seed);

std::optional<Subscript> find_value(const ConsistentTable& t, Value x);

// Every value, the midpoint of each adjacent pair of sorted values, and one
// value below the minimum and above the maximum. Assumes adjacent sorted
// values differ by at least 2 so midpoints are distinct integers.
std::vector<Value> probe_values(const ConsistentTable& t);

class TableOracle final : public ComparisonOracle {
 public:
  TableOracle(const ConsistentTable& table, Value x)
      : ComparisonOracle(table.size()), table_(table), x_(x) {}

 protected:
  Answer respond(Subscript i) override;

 private:
  const ConsistentTable& table_;
  Value x_;
};

// Prime-step edges i -> i*p of the divisibility order on 1..n, in CSR form.
// Reusable across witness builds for the same n.
class DivisibilityDag {
 public:
  explicit DivisibilityDag(Subscript n);

  Subscript size() const { return n_; }
  const std::vector<std::uint32_t>& offsets() const { return offsets_; }
  const std::vector<std::uint32_t>& targets() const { return targets_; }
  const std::vector<std::uint32_t>& in_degree() const { return in_degree_; }

 private:
  Subscript n_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> targets_;
  std::vector<std::uint32_t> in_degree_;
};

struct Witness {
  ConsistentTable table;
  Value x = 0;
  std::optional<Subscript> pinned;  // x = a_pinned when set
};

// A directed cycle through the constraint graph; 0 stands for x.
struct Infeasible {
  std::vector<Subscript> cycle;
};

using WitnessResult = std::variant<Witness, Infeasible>;

// Table and x meeting every constraint, with x = a_pin when pin is given.
WitnessResult witness(const DivisibilityDag& dag, const TranscriptConstraints& constraints,
                      std::optional<Subscript> pin = std::nullopt);
WitnessResult witness(Subscript n, const TranscriptConstraints& constraints,
                      std::optional<Subscript> pin = std::nullopt);

// Replays the constraints against the witness table.
bool realizes(const Witness& w, const TranscriptConstraints& constraints);

struct Confirmed {};

struct Refutation {
  std::optional<Subscript> pinned;  // absent when refuting a "found" claim
  bool pinned_essential = false;
  Witness witness;
};

using RefutationResult = std::variant<Confirmed, Refutation>;

// Checks a finished search's verdict against its transcript. A "not found"
// claim is refuted by pinning x to an undecided element (essential ones
// first); a "found" claim without a final EQ is refuted by a table that
// avoids x.
RefutationResult refute_early_stop(Subscript n, Regime regime, const Transcript& transcript,
                                   bool claimed_found);

// "subscript,value" with a header line.
void write_table_csv(std::ostream& os, const ConsistentTable& t);
ConsistentTable read_table_csv(std::istream& is);

}  // namespace divsearch

#endif  // DIVSEARCH_TABLEGEN_HPP
