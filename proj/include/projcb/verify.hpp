#ifndef PROJCB_VERIFY_HPP
#define PROJCB_VERIFY_HPP

#include <string>
#include <vector>

#include "projcb/board.hpp"

namespace projcb {

struct CheckResult {
  std::string name;
  enum class Status { Pass, Warn, Fail } status = Status::Pass;
  std::string detail;
};

struct VerifyOptions {
  // Bound for exhaustive-search-backed sweeps (criteria over every path).
  int max_m = 6;
  int max_n = 6;
  // Fixed bounds of the remaining sweeps.
  int diag_max_m = 10;   // diagonal-method endpoint sets vs predicates
  int build_max_m = 12;  // construction families
  int sweep_max_m = 8;   // all-north terminal completeness
  int n1_max_m = 12;
  int n2_max_m = 10;
};

// Suites: theorems | props | constructions | reductions | n12 | all.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   const VerifyOptions& opts = {});

const std::vector<std::string>& suite_names();

bool has_failures(const std::vector<CheckResult>& results);

std::string format_results(const std::vector<CheckResult>& results);

}  // namespace projcb

#endif
