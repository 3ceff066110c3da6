#pragma once

// Verification suites for the identities and growth bands. Each check
// carries the anchor of the result it tests (e.g. "Eq2.9", "Thm2.1") so
// report lines can be traced back.

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "tauber/arith.hpp"

namespace tauber {

struct Check {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string measured;
  std::string threshold;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  [[nodiscard]] bool overall() const;
};

struct SuiteOptions {
  // Caps the deepest dyadic index j used by the z -> 1- checks; 0 keeps each
  // check's own depth (14 for the limit form, 16 for the prime-indexed band).
  int j_max = 0;
  double rel_tol = 1e-12;
  std::size_t sieve_limit = 50'000'000;  // prime-indexed series sieve
  std::size_t sieve_cap = kDefaultSieveCap;
  unsigned threads = 0;
};

struct Criterion {
  std::string id;       // "C1".."C11" for acceptance criteria, "S*" supplementary
  std::string suite;    // partitions | bernoulli | tauberian | lambda
  std::string title;
  double time_budget_seconds = 0.0;
  std::function<std::vector<Check>(const SuiteOptions&)> run;
};

// Every check group, in report order.
[[nodiscard]] const std::vector<Criterion>& criteria();
[[nodiscard]] const Criterion& criterion(std::string_view id);

// "all", "partitions", "bernoulli", "tauberian", "lambda".
[[nodiscard]] const std::vector<std::string>& suite_names();
[[nodiscard]] SuiteResult run_suite(std::string_view suite, const SuiteOptions& options = {});

// "PASS [Eq2.9] name: measured=... threshold=..." per check.
void print_suite(std::ostream& out, const SuiteResult& result);
// suite,check,anchor,status,measured,threshold
void write_suite_csv(std::ostream& out, const SuiteResult& result);

}  // namespace tauber
