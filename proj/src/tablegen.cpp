#include "divsearch/tablegen.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

namespace divsearch {

namespace {

std::vector<Subscript> primes_up_to(Subscript n) {
  std::vector<std::uint8_t> composite(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Subscript> primes;
  for (Subscript p = 2; p <= n; ++p) {
    if (composite[static_cast<std::size_t>(p)]) continue;
    primes.push_back(p);
    for (Subscript q = p * p; q <= n; q += p) composite[static_cast<std::size_t>(q)] = 1;
  }
  return primes;
}

std::vector<Subscript> prime_divisors(Subscript v) {
  std::vector<Subscript> out;
  for (Subscript p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

}  // namespace

bool is_consistent(const ConsistentTable& t) {
  const Subscript n = t.size();
  if (n < 1) return false;
  for (Subscript i = 1; i <= n; ++i) {
    for (Subscript k = 2 * i; k <= n; k += i) {
      if (t.at(i) >= t.at(k)) return false;
    }
  }
  std::vector<Value> sorted(t.values.begin() + 1, t.values.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

ConsistentTable random_table(Subscript n, std::uint64_t seed) {
  if (n < 1) throw ContractViolation("table size must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> pending(static_cast<std::size_t>(n) + 1, 0);
  for (Subscript i = 1; i <= n; ++i) {
    for (Subscript k = 2 * i; k <= n; k += i) ++pending[static_cast<std::size_t>(k)];
  }
  std::vector<Subscript> ready{1};
  ConsistentTable t;
  t.values.assign(static_cast<std::size_t>(n) + 1, 0);
  Value next = 2;
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t at = pick(rng);
    const Subscript v = ready[at];
    ready[at] = ready.back();
    ready.pop_back();
    t.values[static_cast<std::size_t>(v)] = next;
    next += 2;
    for (Subscript k = 2 * v; k <= n; k += v) {
      if (--pending[static_cast<std::size_t>(k)] == 0) ready.push_back(k);
    }
  }
  return t;
}

std::optional<Subscript> find_value(const ConsistentTable& t, Value x) {
  for (Subscript i = 1; i <= t.size(); ++i) {
    if (t.at(i) == x) return i;
  }
  return std::nullopt;
}

std::vector<Value> probe_values(const ConsistentTable& t) {
  std::vector<Value> sorted(t.values.begin() + 1, t.values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Value> probes;
  probes.reserve(2 * sorted.size() + 1);
  probes.push_back(sorted.front() - 1);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    probes.push_back(sorted[k]);
    if (k + 1 < sorted.size()) probes.push_back(sorted[k] + (sorted[k + 1] - sorted[k]) / 2);
  }
  probes.push_back(sorted.back() + 1);
  return probes;
}

Answer TableOracle::respond(Subscript i) {
  const Value v = table_.at(i);
  if (x_ < v) return Answer::LT;
  if (x_ > v) return Answer::GT;
  return Answer::EQ;
}

DivisibilityDag::DivisibilityDag(Subscript n) : n_(n) {
  if (n < 1) throw ContractViolation("table size must be >= 1");
  const auto primes = primes_up_to(n);
  offsets_.assign(static_cast<std::size_t>(n) + 2, 0);
  in_degree_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Subscript i = 1; i <= n; ++i) {
    offsets_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(targets_.size());
    for (Subscript p : primes) {
      if (i * p > n) break;
      targets_.push_back(static_cast<std::uint32_t>(i * p));
      ++in_degree_[static_cast<std::size_t>(i * p)];
    }
  }
  offsets_[static_cast<std::size_t>(n) + 1] = static_cast<std::uint32_t>(targets_.size());
}

WitnessResult witness(const DivisibilityDag& dag, const TranscriptConstraints& constraints,
                      std::optional<Subscript> pin) {
  const Subscript n = dag.size();
  if (constraints.n != n) throw ContractViolation("constraints built for a different n");
  if (constraints.eq) {
    if (pin && *pin != *constraints.eq) {
      // x cannot equal two distinct entries.
      return Infeasible{{*constraints.eq, *pin}};
    }
    pin = constraints.eq;
  }
  if (pin && (*pin < 1 || *pin > n)) throw ContractViolation("pin outside 1..n");

  const std::size_t size = static_cast<std::size_t>(n) + 1;
  const std::size_t x_node = pin ? static_cast<std::size_t>(*pin) : 0;
  std::vector<std::uint32_t> indeg(dag.in_degree());
  std::vector<std::uint8_t> into_x(size, 0);
  std::vector<std::uint8_t> from_x(size, 0);
  for (Subscript g : constraints.gt_set) {
    into_x[static_cast<std::size_t>(g)] = 1;
    ++indeg[x_node];
  }
  for (Subscript l : constraints.lt_set) {
    from_x[static_cast<std::size_t>(l)] = 1;
    ++indeg[static_cast<std::size_t>(l)];
  }

  std::vector<std::size_t> order;
  order.reserve(size);
  for (std::size_t v = pin ? 1 : 0; v < size; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  auto release = [&](std::size_t w) {
    if (--indeg[w] == 0) order.push_back(w);
  };
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t v = order[head];
    if (v != 0) {
      const auto& off = dag.offsets();
      for (auto e = off[v]; e < off[v + 1]; ++e) release(dag.targets()[e]);
      if (into_x[v]) release(x_node);
    }
    if (v == x_node) {
      for (Subscript l : constraints.lt_set) release(static_cast<std::size_t>(l));
    }
  }

  const std::size_t nodes = pin ? size - 1 : size;
  if (order.size() < nodes) {
    // Every node left over still has a left-over predecessor; walk back
    // until a node repeats.
    std::vector<std::uint8_t> done(size, 0);
    for (auto v : order) done[v] = 1;
    if (pin) done[0] = 1;
    auto predecessor = [&](std::size_t v) -> std::size_t {
      if (v != 0) {
        for (Subscript p : prime_divisors(static_cast<Subscript>(v))) {
          const auto u = v / static_cast<std::size_t>(p);
          if (!done[u]) return u;
        }
        if (from_x[v] && !done[x_node]) return x_node;
      }
      if (v == x_node) {
        for (Subscript g : constraints.gt_set) {
          if (!done[static_cast<std::size_t>(g)]) return static_cast<std::size_t>(g);
        }
      }
      throw std::logic_error("witness: stuck node without stuck predecessor");
    };
    std::size_t v = 0;
    while (done[v]) ++v;
    std::vector<std::size_t> walk;
    std::vector<std::int64_t> seen(size, -1);
    while (seen[v] < 0) {
      seen[v] = static_cast<std::int64_t>(walk.size());
      walk.push_back(v);
      v = predecessor(v);
    }
    Infeasible bad;
    for (auto k = walk.size(); k-- > static_cast<std::size_t>(seen[v]);) {
      bad.cycle.push_back(static_cast<Subscript>(walk[k]));
    }
    return bad;
  }

  Witness w;
  w.pinned = pin;
  w.table.values.assign(size, 0);
  std::vector<Value> value(size, 0);
  for (std::size_t k = 0; k < order.size(); ++k) value[order[k]] = 2 * static_cast<Value>(k + 1);
  for (std::size_t v = 1; v < size; ++v) w.table.values[v] = value[v];
  w.x = value[x_node];
  return w;
}

WitnessResult witness(Subscript n, const TranscriptConstraints& constraints,
                      std::optional<Subscript> pin) {
  return witness(DivisibilityDag(n), constraints, pin);
}

bool realizes(const Witness& w, const TranscriptConstraints& constraints) {
  const auto& t = w.table;
  if (t.size() != constraints.n || !is_consistent(t)) return false;
  for (Subscript g : constraints.gt_set) {
    if (!(w.x > t.at(g))) return false;
  }
  for (Subscript l : constraints.lt_set) {
    if (!(w.x < t.at(l))) return false;
  }
  if (constraints.eq && t.at(*constraints.eq) != w.x) return false;
  if (w.pinned && t.at(*w.pinned) != w.x) return false;
  if (!w.pinned && !constraints.eq && find_value(t, w.x)) return false;
  return true;
}

RefutationResult refute_early_stop(Subscript n, Regime regime, const Transcript& transcript,
                                   bool claimed_found) {
  if (transcript.table_size() != n) throw ContractViolation("transcript built for a different n");
  const auto constraints = transcript.constraints();
  const DivisibilityDag dag(n);
  auto refute = [&](std::optional<Subscript> pin, bool essential) -> RefutationResult {
    auto result = witness(dag, constraints, pin);
    if (std::holds_alternative<Infeasible>(result)) {
      throw std::logic_error("refute_early_stop: undecided element " +
                             std::to_string(pin.value_or(0)) + " cannot be pinned");
    }
    return Refutation{pin, essential, std::get<Witness>(std::move(result))};
  };

  if (claimed_found) {
    if (constraints.eq) return Confirmed{};
    return refute(std::nullopt, false);
  }
  if (constraints.eq) return refute(constraints.eq, false);

  const auto essential = essential_set(n, regime);
  for (Subscript e : essential.subscripts) {
    if (!transcript.decided(e)) return refute(e, true);
  }
  for (Subscript i = 1; i <= n; ++i) {
    if (!transcript.decided(i)) return refute(i, false);
  }
  return Confirmed{};
}

void write_table_csv(std::ostream& os, const ConsistentTable& t) {
  os << "subscript,value\n";
  for (Subscript i = 1; i <= t.size(); ++i) os << i << ',' << t.at(i) << '\n';
}

ConsistentTable read_table_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "subscript,value") {
    throw std::runtime_error("table csv: expected header 'subscript,value'");
  }
  ConsistentTable t;
  t.values.push_back(0);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    Subscript i = 0;
    Value v = 0;
    char comma = 0;
    if (!(row >> i >> comma >> v) || comma != ',') {
      throw std::runtime_error("table csv: malformed line '" + line + "'");
    }
    if (i != t.size() + 1) throw std::runtime_error("table csv: subscripts must run 1..n in order");
    t.values.push_back(v);
  }
  if (t.size() < 1) throw std::runtime_error("table csv: no rows");
  return t;
}

}  // namespace divsearch
