#ifndef DIVSEARCH_VERIFY_HPP
#define DIVSEARCH_VERIFY_HPP

// Named check suites over ranges of n, shared by the command line tool and
// the acceptance run.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "divsearch/types.hpp"

namespace divsearch {

struct SuiteReport {
  std::string suite;
  Subscript n_max = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;  // one line each, capped

  bool passed() const { return violations.empty(); }
};

inline constexpr std::size_t kMaxReportedViolations = 50;

// Row-length lemmas for every layer shape occurring with n <= n_max.
SuiteReport verify_structural(Subscript n_max);
// verify_essentiality under RS2 and RS2* for every n <= n_max.
SuiteReport verify_essential(Subscript n_max);
// Quotient lemmas on all pairs up to n_max, and 12i > n for every n <= n_max.
SuiteReport verify_quotient(Subscript n_max);
// sweep_witnesses under RS2 and RS2* for every n <= n_max.
SuiteReport verify_witness(Subscript n_max);

// "structural", "essential", "quotient" or "witness".
SuiteReport run_suite(std::string_view suite, Subscript n_max);
const std::vector<std::string>& suite_names();

}  // namespace divsearch

#endif  // DIVSEARCH_VERIFY_HPP
