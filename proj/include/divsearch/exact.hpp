#ifndef DIVSEARCH_EXACT_HPP
#define DIVSEARCH_EXACT_HPP

// Exact worst-case optimal comparison count for small tables, by minimax over
// knowledge states. A state records, for every a_i, whether a_i < x, a_i > x
// or unknown, closed under divisibility. Independent of the search and
// adversary code so it can check both.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "divsearch/tablegen.hpp"

namespace divsearch {

struct ExactOptions {
  Subscript cap = 12;
  bool memoize = true;
};

// Largest n the bitmask state encoding supports, whatever the cap.
inline constexpr Subscript kExactHardLimit = 30;

struct KnowledgeState {
  std::uint32_t below = 0;  // bit i-1: a_i < x
  std::uint32_t above = 0;  // bit i-1: a_i > x

  bool operator==(const KnowledgeState&) const = default;
};

class ExactSolver {
 public:
  explicit ExactSolver(Subscript n, ExactOptions options = {});

  Subscript size() const { return n_; }
  int tau();
  int value(KnowledgeState s);
  // Smallest subscript achieving the optimum in s; none when s is terminal.
  std::optional<Subscript> best_query(KnowledgeState s);

  KnowledgeState after(KnowledgeState s, Subscript i, Answer a) const;
  std::uint32_t candidates(KnowledgeState s) const;
  std::size_t states_evaluated() const { return evaluated_; }

 private:
  Subscript n_;
  ExactOptions options_;
  std::uint32_t full_;
  std::vector<std::uint32_t> divisors_;   // index i: bits of divisors of i
  std::vector<std::uint32_t> multiples_;  // index i: bits of multiples of i
  std::unordered_map<std::uint64_t, std::int8_t> memo_;
  std::size_t evaluated_ = 0;

  static std::uint64_t code(KnowledgeState s);
};

int tau_exact(Subscript n, const ExactOptions& options = {});

// Ternary decision tree; a node queries one subscript, EQ always ends FOUND.
struct DecisionTree {
  struct Node {
    Subscript query = 0;
    int lt = -1;  // child index, -1 is NOT_FOUND
    int gt = -1;
  };
  Subscript n = 1;
  std::vector<Node> nodes;  // nodes[0] is the root when non-empty

  std::size_t depth() const;
  nlohmann::ordered_json to_json() const;
  // Walks the tree for x; returns the verdict and the comparisons spent.
  struct Verdict {
    bool found = false;
    std::size_t comparisons = 0;
  };
  Verdict evaluate(const ConsistentTable& table, Value x) const;
};

DecisionTree optimal_tree(Subscript n, const ExactOptions& options = {});

}  // namespace divsearch

#endif  // DIVSEARCH_EXACT_HPP
