#include "divsearch/verify.hpp"

#include <set>

#include "divsearch/adversary.hpp"
#include "divsearch/divposet.hpp"
#include "divsearch/duel.hpp"

namespace divsearch {

namespace {

void note(SuiteReport& r, std::string line) {
  if (r.violations.size() < kMaxReportedViolations) r.violations.push_back(std::move(line));
}

void note_lemmas(SuiteReport& r, Subscript n, const std::vector<LemmaViolation>& found) {
  for (const auto& v : found) {
    note(r, "n=" + std::to_string(n) + " " + v.lemma + " a=" + std::to_string(v.a) +
                " b=" + std::to_string(v.b) + " " + v.detail);
  }
}

void require_n_max(Subscript n_max) {
  if (n_max < 1) throw ContractViolation("n_max must be >= 1");
}

constexpr Regime kLowerBoundRegimes[] = {Regime::RS2, Regime::RS2Star};

}  // namespace

SuiteReport verify_structural(Subscript n_max) {
  require_n_max(n_max);
  SuiteReport r{"structural", n_max, 0, {}};
  // L_b at n has the row lengths of L_1 at n / b, so L_1 at every m <= n_max
  // covers every layer shape.
  std::set<std::vector<std::size_t>> seen;
  for (Subscript m = 1; m <= n_max; ++m) {
    auto lengths = layer_row_lengths(1, m);
    if (!seen.insert(lengths).second) continue;
    ++r.checks;
    note_lemmas(r, m, check_row_lengths(1, lengths));
  }
  ++r.checks;
  note_lemmas(r, n_max, check_structural_lemmas(n_max));
  return r;
}

SuiteReport verify_essential(Subscript n_max) {
  require_n_max(n_max);
  SuiteReport r{"essential", n_max, 0, {}};
  for (Subscript n = 1; n <= n_max; ++n) {
    for (Regime regime : kLowerBoundRegimes) {
      ++r.checks;
      for (const auto& v : verify_essentiality(n, regime)) {
        note(r, "n=" + std::to_string(n) + " " + std::string(to_string(regime)) + " cutter=" +
                    std::to_string(v.cutter) + " victim=" + std::to_string(v.victim));
      }
    }
  }
  return r;
}

SuiteReport verify_quotient(Subscript n_max) {
  require_n_max(n_max);
  SuiteReport r{"quotient", n_max, 1, {}};
  // Whether two subscripts share a layer does not depend on n.
  note_lemmas(r, n_max, check_quotient_lemmas(n_max));
  for (Subscript n = 1; n <= n_max; ++n) {
    ++r.checks;
    note_lemmas(r, n, check_special_first_members(n));
  }
  return r;
}

SuiteReport verify_witness(Subscript n_max) {
  require_n_max(n_max);
  SuiteReport r{"witness", n_max, 0, {}};
  for (Subscript n = 1; n <= n_max; ++n) {
    for (Regime regime : kLowerBoundRegimes) {
      const auto sweep = sweep_witnesses(n, regime);
      r.checks += sweep.checked;
      for (Subscript e : sweep.failures) {
        note(r, "n=" + std::to_string(n) + " " + std::string(to_string(regime)) +
                    " no witness pinning " + std::to_string(e));
      }
    }
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"structural", "essential", "quotient", "witness"};
  return names;
}

SuiteReport run_suite(std::string_view suite, Subscript n_max) {
  if (suite == "structural") return verify_structural(n_max);
  if (suite == "essential") return verify_essential(n_max);
  if (suite == "quotient") return verify_quotient(n_max);
  if (suite == "witness") return verify_witness(n_max);
  throw ContractViolation("unknown suite '" + std::string(suite) + "'");
}

}  // namespace divsearch
