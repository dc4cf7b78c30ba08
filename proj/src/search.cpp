#include "divsearch/search.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divsearch {

StaircaseView StaircaseView::whole(std::span<const std::vector<Subscript>> rows) {
  return StaircaseView{rows, 0, rows.empty() ? 0 : rows.front().size()};
}

std::size_t StaircaseView::column_count() const {
  if (empty()) return 0;
  return std::min(rows[first_row].size(), column_limit);
}

bool StaircaseView::contains(std::size_t row, std::size_t col) const {
  return row >= first_row && row < rows.size() && col < column_limit && col < rows[row].size();
}

namespace {

SearchOutcome finish(const ComparisonOracle& oracle, std::size_t start,
                     std::optional<Subscript> match = std::nullopt) {
  SearchOutcome out;
  out.found = match.has_value();
  out.match = match;
  out.comparisons = oracle.comparisons() - start;
  return out;
}

// Found-or-not result of a sub-search, with the comparison count rebased.
SearchOutcome continue_with(const SearchOutcome& inner, const ComparisonOracle& oracle,
                            std::size_t start) {
  return finish(oracle, start, inner.match);
}

void check_staircase(std::span<const std::vector<Subscript>> rows) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].empty()) throw ContractViolation("staircase rows must be non-empty");
    if (r > 0 && rows[r].size() > rows[r - 1].size()) {
      throw ContractViolation("staircase row lengths must not increase downward");
    }
  }
}

SearchOutcome case_one(std::span<const std::vector<Subscript>> rows, std::size_t r,
                       ComparisonOracle& oracle);

// First row one longer than the second, second two longer than the third.
// Probe a_4i (second to last of the first row); on GT also settle a_8i and
// continue with the rows below, whose first row is two longer than the next.
SearchOutcome case_two(std::span<const std::vector<Subscript>> rows, std::size_t r,
                       ComparisonOracle& oracle) {
  const std::size_t start = oracle.comparisons();
  const auto& top = rows[r];
  const std::size_t len = top.size();
  const Answer a = oracle.compare(top[len - 2]);
  if (a == Answer::EQ) return finish(oracle, start, top[len - 2]);
  if (a == Answer::LT) {
    return continue_with(search_monotone_grid(StaircaseView{rows, r, len - 2}, oracle), oracle,
                         start);
  }
  if (oracle.compare(top[len - 1]) == Answer::EQ) return finish(oracle, start, top[len - 1]);
  return continue_with(case_one(rows, r + 1, oracle), oracle, start);
}

// First row two longer than the second. Probe a_2i (second to last); LT
// removes the last two columns, GT leaves only a_4i of the first row.
SearchOutcome case_one(std::span<const std::vector<Subscript>> rows, std::size_t r,
                       ComparisonOracle& oracle) {
  const std::size_t start = oracle.comparisons();
  const auto& top = rows[r];
  const std::size_t len = top.size();
  const Answer a = oracle.compare(top[len - 2]);
  if (a == Answer::EQ) return finish(oracle, start, top[len - 2]);
  if (a == Answer::LT) {
    return continue_with(search_monotone_grid(StaircaseView{rows, r, len - 2}, oracle), oracle,
                         start);
  }
  if (oracle.compare(top[len - 1]) == Answer::EQ) return finish(oracle, start, top[len - 1]);
  return continue_with(search_monotone_grid(StaircaseView{rows, r + 1, len - 2}, oracle), oracle,
                       start);
}

std::size_t row_length(std::span<const std::vector<Subscript>> rows, std::size_t r) {
  return r < rows.size() ? rows[r].size() : 0;
}

SearchOutcome search_layers(Subscript n, ComparisonOracle& oracle, bool improved) {
  const std::size_t start = oracle.comparisons();
  for (const auto& layer : layers_by_size(n)) {
    SearchOutcome part;
    if (improved && !uses_grid_search(layer.size())) {
      part = search_layer(layer, oracle);
    } else {
      part = search_monotone_grid(StaircaseView::whole(layer.rows), oracle);
    }
    if (part.found) return finish(oracle, start, part.match);
  }
  return finish(oracle, start);
}

}  // namespace

SearchOutcome search_monotone_grid(StaircaseView view, ComparisonOracle& oracle,
                                   const GridObserver& observe) {
  check_staircase(view.rows);
  const std::size_t start = oracle.comparisons();
  while (!view.empty()) {
    const auto& row = view.rows[view.first_row];
    const std::size_t col = std::min(row.size(), view.column_limit) - 1;
    const Answer a = oracle.compare(row[col]);
    if (a == Answer::EQ) return finish(oracle, start, row[col]);
    if (a == Answer::GT) {
      ++view.first_row;
    } else {
      view.column_limit = col;
    }
    if (observe) observe(view);
  }
  return finish(oracle, start);
}

bool uses_grid_search(std::size_t layer_size) {
  return layer_size == 1 || layer_size == 2 || layer_size == 3 || layer_size == 5;
}

SearchOutcome search_layer(const LayerGrid& layer, ComparisonOracle& oracle) {
  if (uses_grid_search(layer.size())) {
    throw ContractViolation("layer search needs a layer of size other than 1, 2, 3, 5; got " +
                            std::to_string(layer.size()));
  }
  const std::span<const std::vector<Subscript>> rows(layer.rows);
  check_staircase(rows);
  const std::size_t first = row_length(rows, 0);
  const std::size_t second = row_length(rows, 1);
  const std::size_t third = row_length(rows, 2);
  if (first == second + 2) return case_one(rows, 0, oracle);
  if (first == second + 1 && second == third + 2) return case_two(rows, 0, oracle);
  throw ContractViolation("layer " + std::to_string(layer.base) +
                          " does not have a layer-search shape");
}

SearchOutcome search_chains(Subscript n, ComparisonOracle& oracle) {
  const std::size_t start = oracle.comparisons();
  for (const auto& chain : chain_partition(n)) {
    std::size_t lo = 0;
    std::size_t hi = chain.members.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const Answer a = oracle.compare(chain.members[mid]);
      if (a == Answer::EQ) return finish(oracle, start, chain.members[mid]);
      if (a == Answer::LT) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
  }
  return finish(oracle, start);
}

SearchOutcome search_table(Subscript n, ComparisonOracle& oracle) {
  return search_layers(n, oracle, true);
}

SearchOutcome search_grid_baseline(Subscript n, ComparisonOracle& oracle) {
  return search_layers(n, oracle, false);
}

std::vector<LayerGrid> layers_by_size(Subscript n) {
  auto layers = layer_decomposition(n);
  std::stable_sort(layers.begin(), layers.end(), [](const LayerGrid& a, const LayerGrid& b) {
    return a.size() > b.size();
  });
  return layers;
}

std::size_t layer_budget(const LayerGrid& layer) {
  const std::size_t grid = layer.row_count() + layer.column_count() - 1;
  return uses_grid_search(layer.size()) ? grid : grid - 1;
}

std::size_t budget_s1(Subscript n) {
  if (n < 1) throw ContractViolation("table size must be >= 1");
  std::size_t total = 0;
  for (Subscript odd = 1; odd <= n; odd += 2) {
    std::size_t len = 0;
    for (Subscript v = odd; v <= n; v *= 2) ++len;
    std::size_t steps = 0;
    while ((std::size_t{1} << steps) < len + 1) ++steps;
    total += steps;
  }
  return total;
}

namespace {

std::size_t sum_layer_budgets(Subscript n, bool improved) {
  if (n < 1) throw ContractViolation("table size must be >= 1");
  std::size_t total = 0;
  for (Subscript b = 1; b <= n; ++b) {
    if (b % 2 == 0 || b % 3 == 0) continue;
    const auto lengths = layer_row_lengths(b, n);
    std::size_t size = 0;
    for (auto len : lengths) size += len;
    total += lengths.size() + lengths.front() - 1;
    if (improved && !uses_grid_search(size)) total -= 1;
  }
  return total;
}

}  // namespace

std::size_t budget_s2(Subscript n) { return sum_layer_budgets(n, true); }

std::size_t budget_grid(Subscript n) { return sum_layer_budgets(n, false); }

double chain_search_constant() {
  double sum = 0.0;
  for (int t = 0; t < 7; ++t) sum += std::ldexp(1.0, -(1 << t));
  return sum;
}

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Chains: return "chains";
    case Algorithm::Table: return "table";
    case Algorithm::Grid: return "grid";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view s) {
  if (s == "chains") return Algorithm::Chains;
  if (s == "table") return Algorithm::Table;
  if (s == "grid") return Algorithm::Grid;
  throw std::invalid_argument("unknown algorithm: " + std::string(s));
}

SearchOutcome run_search(Algorithm a, Subscript n, ComparisonOracle& oracle) {
  switch (a) {
    case Algorithm::Chains: return search_chains(n, oracle);
    case Algorithm::Table: return search_table(n, oracle);
    case Algorithm::Grid: return search_grid_baseline(n, oracle);
  }
  throw std::invalid_argument("unknown algorithm");
}

std::size_t worst_case_budget(Algorithm a, Subscript n) {
  switch (a) {
    case Algorithm::Chains: return budget_s1(n);
    case Algorithm::Table: return budget_s2(n);
    case Algorithm::Grid: return budget_grid(n);
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace divsearch
