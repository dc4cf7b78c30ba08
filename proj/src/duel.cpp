#include "divsearch/duel.hpp"

#include <map>

namespace divsearch {

DuelResult duel(Subscript n, Regime regime, Algorithm algorithm) {
  Adversary adversary(n, regime);
  DuelResult r;
  r.n = n;
  r.regime = regime;
  r.algorithm = algorithm;
  r.outcome = run_search(algorithm, n, adversary);
  r.forced = forced_comparison_count(adversary.units());
  r.budget = worst_case_budget(algorithm, n);
  r.transcript = adversary.transcript().entries();
  const auto verdict = refute_early_stop(n, regime, adversary.transcript(), r.outcome.found);
  r.confirmed = std::holds_alternative<Confirmed>(verdict);
  r.lower_bound_holds = !r.confirmed || r.outcome.comparisons >= r.forced;
  return r;
}

WitnessSweep sweep_witnesses(Subscript n, Regime regime, Algorithm algorithm) {
  Adversary adversary(n, regime);
  run_search(algorithm, n, adversary);
  const auto& units = adversary.units();
  const auto& entries = adversary.transcript().entries();
  const DivisibilityDag dag(n);

  std::map<std::int64_t, std::vector<Subscript>> by_unit;
  for (Subscript e : essential_set(units).subscripts) by_unit[units.unit_of(e)].push_back(e);

  WitnessSweep sweep;
  TranscriptConstraints c;
  for (const auto& [unit, members] : by_unit) {
    c.n = n;
    c.gt_set.clear();
    c.lt_set.clear();
    c.eq.reset();
    for (const auto& q : entries) {
      if (units.unit_of(q.subscript) == unit) continue;
      switch (q.answer) {
        case Answer::GT: c.gt_set.push_back(q.subscript); break;
        case Answer::LT: c.lt_set.push_back(q.subscript); break;
        case Answer::EQ: c.eq = q.subscript; break;
      }
    }
    for (Subscript e : members) {
      ++sweep.checked;
      const auto w = witness(dag, c, e);
      const auto* table = std::get_if<Witness>(&w);
      if (table == nullptr || !realizes(*table, c)) sweep.failures.push_back(e);
    }
  }
  return sweep;
}

}  // namespace divsearch
