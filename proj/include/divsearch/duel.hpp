#ifndef DIVSEARCH_DUEL_HPP
#define DIVSEARCH_DUEL_HPP

#include <cstddef>
#include <vector>

#include "divsearch/adversary.hpp"
#include "divsearch/search.hpp"
#include "divsearch/tablegen.hpp"

namespace divsearch {

struct DuelResult {
  Subscript n = 1;
  Regime regime = Regime::RS1;
  Algorithm algorithm = Algorithm::Table;
  SearchOutcome outcome;
  std::size_t forced = 0;
  std::size_t budget = 0;
  std::vector<QueryRecord> transcript;
  // refute_early_stop accepted the verdict.
  bool confirmed = false;
  // confirmed implies comparisons >= forced; false means a bug somewhere.
  bool lower_bound_holds = false;
};

// Runs a search algorithm against the adversary and audits the result.
DuelResult duel(Subscript n, Regime regime, Algorithm algorithm);

struct WitnessSweep {
  std::size_t checked = 0;
  std::vector<Subscript> failures;  // essential elements with no valid witness
};

// After a completed duel, pins each essential element e in turn against the
// transcript with the answers on e's own unit removed, and checks that a
// witness table exists and realizes those constraints.
WitnessSweep sweep_witnesses(Subscript n, Regime regime, Algorithm algorithm = Algorithm::Table);

}  // namespace divsearch

#endif  // DIVSEARCH_DUEL_HPP
