#ifndef DIVSEARCH_TESTS_FAULTY_HPP
#define DIVSEARCH_TESTS_FAULTY_HPP

// Deliberately broken searches. Each one answers "not found" without having
// decided every element, so refute_early_stop must catch it.

#include <functional>
#include <string>
#include <vector>

#include "divsearch/search.hpp"

namespace divsearch::testing {

struct FaultyAlgorithm {
  std::string name;
  std::function<SearchOutcome(Subscript, ComparisonOracle&)> run;
};

namespace detail {

inline SearchOutcome search_one_layer(const LayerGrid& layer, ComparisonOracle& oracle) {
  if (uses_grid_search(layer.size())) {
    return search_monotone_grid(StaircaseView::whole(layer.rows), oracle);
  }
  return search_layer(layer, oracle);
}

}  // namespace detail

// Stops after half the comparisons search_table would need.
inline SearchOutcome search_early_stop(Subscript n, ComparisonOracle& oracle) {
  const std::size_t limit = budget_s2(n) / 2;
  SearchOutcome out;
  for (const auto& layer : layers_by_size(n)) {
    if (oracle.comparisons() >= limit) break;
    out = detail::search_one_layer(layer, oracle);
    if (out.found) break;
  }
  out.comparisons = oracle.comparisons();
  return out;
}

// Binary search over all chains except the longest one.
inline SearchOutcome search_omitting_chain(Subscript n, ComparisonOracle& oracle) {
  SearchOutcome out;
  for (const auto& chain : chain_partition(n)) {
    if (chain.odd_part == 1) continue;
    std::size_t lo = 0;
    std::size_t hi = chain.members.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const Answer a = oracle.compare(chain.members[mid]);
      if (a == Answer::EQ) {
        out.found = true;
        out.match = chain.members[mid];
        out.comparisons = oracle.comparisons();
        return out;
      }
      if (a == Answer::LT) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
  }
  out.comparisons = oracle.comparisons();
  return out;
}

// search_table that skips every layer whose base is a multiple of 7.
inline SearchOutcome search_skipping_layers(Subscript n, ComparisonOracle& oracle) {
  SearchOutcome out;
  for (const auto& layer : layers_by_size(n)) {
    if (layer.base % 7 == 0) continue;
    out = detail::search_one_layer(layer, oracle);
    if (out.found) break;
  }
  out.comparisons = oracle.comparisons();
  return out;
}

inline std::vector<FaultyAlgorithm> faulty_algorithms() {
  return {{"early-stop", search_early_stop},
          {"omitted-chain", search_omitting_chain},
          {"skipped-layers", search_skipping_layers}};
}

}  // namespace divsearch::testing

#endif  // DIVSEARCH_TESTS_FAULTY_HPP
