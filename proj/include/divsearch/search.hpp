#ifndef DIVSEARCH_SEARCH_HPP
#define DIVSEARCH_SEARCH_HPP

// Membership search for x in a table consistent with divisibility, driven by
// a ComparisonOracle so the same code runs against concrete tables,
// adversaries and scripted answer sequences.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "divsearch/divposet.hpp"
#include "divsearch/oracle.hpp"

namespace divsearch {

struct SearchOutcome {
  bool found = false;
  std::optional<Subscript> match;
  std::size_t comparisons = 0;
};

// Residual part of a staircase grid (row lengths non-increasing downward,
// each row increasing to the right, each column increasing downward).
// Rows before first_row and columns at or past column_limit are gone.
struct StaircaseView {
  std::span<const std::vector<Subscript>> rows;
  std::size_t first_row = 0;
  std::size_t column_limit = 0;

  static StaircaseView whole(std::span<const std::vector<Subscript>> rows);

  bool empty() const { return first_row >= rows.size() || column_limit == 0; }
  std::size_t row_count() const { return empty() ? 0 : rows.size() - first_row; }
  std::size_t column_count() const;
  bool contains(std::size_t row, std::size_t col) const;
};

using GridObserver = std::function<void(const StaircaseView&)>;

// Queries the top-right corner of the residual view until it is empty:
// GT drops the first row, LT drops the rightmost column. At most
// rows + columns - 1 comparisons. The observer sees the view after every step.
SearchOutcome search_monotone_grid(StaircaseView view, ComparisonOracle& oracle,
                                   const GridObserver& observe = {});

// Layers of these sizes have no improved strategy and take rows + columns - 1.
bool uses_grid_search(std::size_t layer_size);

// At most rows + columns - 2 comparisons. Requires a layer whose size is not
// 1, 2, 3 or 5; throws ContractViolation otherwise.
SearchOutcome search_layer(const LayerGrid& layer, ComparisonOracle& oracle);

// Binary search of every chain j*2^k, j odd, in increasing j.
SearchOutcome search_chains(Subscript n, ComparisonOracle& oracle);

// Every layer in turn, largest first, grid search or layer search by size.
SearchOutcome search_table(Subscript n, ComparisonOracle& oracle);

// Every layer with the rows + columns - 1 grid search only.
SearchOutcome search_grid_baseline(Subscript n, ComparisonOracle& oracle);

// Layers in the order search_table visits them.
std::vector<LayerGrid> layers_by_size(Subscript n);

// Worst-case cost of one layer under search_table.
std::size_t layer_budget(const LayerGrid& layer);

// Sum over chains of ceil(log2(|chain| + 1)).
std::size_t budget_s1(Subscript n);
// Sum over layers of rows + columns - 1 (sizes 1, 2, 3, 5) or - 2 (others).
std::size_t budget_s2(Subscript n);
// Sum over layers of rows + columns - 1.
std::size_t budget_grid(Subscript n);

// Limit of budget_s1(n) / n: sum over t >= 0 of 2^-(2^t).
double chain_search_constant();

enum class Algorithm { Chains, Table, Grid };

std::string_view to_string(Algorithm a);
Algorithm algorithm_from_string(std::string_view s);

SearchOutcome run_search(Algorithm a, Subscript n, ComparisonOracle& oracle);
std::size_t worst_case_budget(Algorithm a, Subscript n);

}  // namespace divsearch

#endif  // DIVSEARCH_SEARCH_HPP
