#ifndef DIVSEARCH_ANSWER_WALK_HPP
#define DIVSEARCH_ANSWER_WALK_HPP

// Exhaustive walk over every consistent answer sequence a search routine can
// receive. The routine is re-run from scratch with a scripted prefix of
// answers; the first query past the prefix becomes a branch point.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "divsearch/oracle.hpp"
#include "divsearch/search.hpp"

namespace divsearch {

using SearchRoutine = std::function<SearchOutcome(ComparisonOracle&)>;

struct WalkReport {
  std::size_t max_comparisons = 0;
  std::size_t leaves = 0;
  // Leaves where the verdict does not follow from the transcript: "found"
  // without a final EQ, or "not found" with an undecided element in scope.
  std::size_t unjustified_leaves = 0;
  std::vector<Answer> worst_path;
};

struct WalkOptions {
  bool allow_eq = true;
  // Elements that must be decided whenever the routine reports not found.
  // Empty means all of 1..n.
  std::vector<Subscript> scope;
};

WalkReport walk_answer_tree(Subscript n, const SearchRoutine& routine,
                            const WalkOptions& options = {});

}  // namespace divsearch

#endif  // DIVSEARCH_ANSWER_WALK_HPP
