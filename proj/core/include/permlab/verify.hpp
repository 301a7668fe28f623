#pragma once

// Invariant suites runnable from the CLI `verify` subcommand. Each check
// reports a witness (permutation, pattern, index) on failure instead of
// aborting, so a broken invariant is diagnosable from the report alone.

#include <cstdint>
#include <string>
#include <vector>

namespace permlab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // witness or summary
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

SuiteReport verify_permcore(int n_max);
SuiteReport verify_updown(int n_max, std::uint64_t seed);
SuiteReport verify_catalan(int n_max, std::uint64_t seed);
SuiteReport verify_bijections(int n_max);
SuiteReport verify_totals(int n_max);
SuiteReport verify_series(int order);

// All suites, with per-suite size caps derived from n_max and the series
// suite truncated at `order`.
std::vector<SuiteReport> verify_all(int n_max, std::uint64_t seed, int order);

}  // namespace permlab
