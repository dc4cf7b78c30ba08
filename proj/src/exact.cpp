#include "divsearch/exact.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace divsearch {

namespace {

std::uint32_t bit(Subscript i) { return std::uint32_t{1} << (i - 1); }

}  // namespace

ExactSolver::ExactSolver(Subscript n, ExactOptions options) : n_(n), options_(options) {
  if (n < 1) throw ContractViolation("table size must be >= 1");
  if (n > options.cap) {
    throw ContractViolation("exact solve refused for n=" + std::to_string(n) + ": above cap " +
                            std::to_string(options.cap) +
                            " (state space grows steeply; raise the cap explicitly)");
  }
  if (n > kExactHardLimit) {
    throw ContractViolation("exact solve supports n <= " + std::to_string(kExactHardLimit));
  }
  full_ = (std::uint32_t{1} << n) - 1;
  divisors_.assign(static_cast<std::size_t>(n) + 1, 0);
  multiples_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Subscript i = 1; i <= n; ++i) {
    for (Subscript k = i; k <= n; k += i) {
      multiples_[static_cast<std::size_t>(i)] |= bit(k);
      divisors_[static_cast<std::size_t>(k)] |= bit(i);
    }
  }
}

std::uint64_t ExactSolver::code(KnowledgeState s) {
  return (static_cast<std::uint64_t>(s.below) << 32) | s.above;
}

std::uint32_t ExactSolver::candidates(KnowledgeState s) const {
  return full_ & ~(s.below | s.above);
}

KnowledgeState ExactSolver::after(KnowledgeState s, Subscript i, Answer a) const {
  switch (a) {
    case Answer::GT: s.below |= divisors_[static_cast<std::size_t>(i)]; break;
    case Answer::LT: s.above |= multiples_[static_cast<std::size_t>(i)]; break;
    case Answer::EQ: throw ContractViolation("an EQ answer ends the search");
  }
  // Queries only touch unknown elements, whose closures never collide.
  if (s.below & s.above) throw std::logic_error("exact: contradictory knowledge state");
  return s;
}

int ExactSolver::value(KnowledgeState s) {
  const std::uint32_t open = candidates(s);
  if (open == 0) return 0;
  if (options_.memoize) {
    if (auto it = memo_.find(code(s)); it != memo_.end()) return it->second;
  }
  ++evaluated_;

  int best = static_cast<int>(n_) + 1;
  for (std::uint32_t rest = open; rest != 0; rest &= rest - 1) {
    const Subscript i = std::countr_zero(rest) + 1;
    // EQ ends at cost 1, so only LT and GT can push a branch higher.
    const int gt = value(after(s, i, Answer::GT));
    if (1 + gt >= best) continue;
    const int lt = value(after(s, i, Answer::LT));
    best = std::min(best, 1 + std::max(gt, lt));
  }
  if (options_.memoize) memo_.emplace(code(s), static_cast<std::int8_t>(best));
  return best;
}

int ExactSolver::tau() { return value(KnowledgeState{}); }

std::optional<Subscript> ExactSolver::best_query(KnowledgeState s) {
  const std::uint32_t open = candidates(s);
  if (open == 0) return std::nullopt;
  const int target = value(s);
  for (std::uint32_t rest = open; rest != 0; rest &= rest - 1) {
    const Subscript i = std::countr_zero(rest) + 1;
    const int cost =
        1 + std::max(value(after(s, i, Answer::GT)), value(after(s, i, Answer::LT)));
    if (cost == target) return i;
  }
  throw std::logic_error("exact: no query attains the state value");
}

int tau_exact(Subscript n, const ExactOptions& options) { return ExactSolver(n, options).tau(); }

std::size_t DecisionTree::depth() const {
  if (nodes.empty()) return 0;
  // Children always have larger indices than their parent.
  std::vector<std::size_t> d(nodes.size(), 0);
  for (std::size_t k = nodes.size(); k-- > 0;) {
    const auto& node = nodes[k];
    const std::size_t lt = node.lt >= 0 ? d[static_cast<std::size_t>(node.lt)] : 0;
    const std::size_t gt = node.gt >= 0 ? d[static_cast<std::size_t>(node.gt)] : 0;
    d[k] = 1 + std::max(lt, gt);
  }
  return d[0];
}

nlohmann::ordered_json DecisionTree::to_json() const {
  auto build = [&](auto&& self, int index) -> nlohmann::ordered_json {
    if (index < 0) return "NOT_FOUND";
    const auto& node = nodes[static_cast<std::size_t>(index)];
    nlohmann::ordered_json j;
    j["q"] = node.query;
    j["lt"] = self(self, node.lt);
    j["eq"] = "FOUND";
    j["gt"] = self(self, node.gt);
    return j;
  };
  return build(build, nodes.empty() ? -1 : 0);
}

DecisionTree::Verdict DecisionTree::evaluate(const ConsistentTable& table, Value x) const {
  Verdict v;
  int at = nodes.empty() ? -1 : 0;
  while (at >= 0) {
    const auto& node = nodes[static_cast<std::size_t>(at)];
    ++v.comparisons;
    const Value a = table.at(node.query);
    if (x == a) {
      v.found = true;
      return v;
    }
    at = x < a ? node.lt : node.gt;
  }
  return v;
}

DecisionTree optimal_tree(Subscript n, const ExactOptions& options) {
  ExactSolver solver(n, options);
  DecisionTree tree;
  tree.n = n;
  auto build = [&](auto&& self, KnowledgeState s) -> int {
    const auto q = solver.best_query(s);
    if (!q) return -1;
    const int index = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back({*q, -1, -1});
    const int lt = self(self, solver.after(s, *q, Answer::LT));
    const int gt = self(self, solver.after(s, *q, Answer::GT));
    tree.nodes[static_cast<std::size_t>(index)].lt = lt;
    tree.nodes[static_cast<std::size_t>(index)].gt = gt;
    return index;
  };
  build(build, KnowledgeState{});
  return tree;
}

}  // namespace divsearch
