#pragma once

// Coefficient families c_n = a_n * b_n built from the arithmetic and partition
// tables, each paired with a growth certificate valid for all n.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tauber/arith.hpp"
#include "tauber/partitions.hpp"
#include "tauber/series.hpp"

namespace tauber {

// Slack exponent absorbing log factors: log^p(n) <= C_p n^delta.
inline constexpr double kLogSlack = 0.25;

// (p / (delta e))^p, the maximum of log(x)^p / x^delta over x >= 1.
[[nodiscard]] double log_power_constant(double p, double delta = kLogSlack);

// Certificate (1.01 * C_p, 1 + delta) for coefficients bounded by log(n)^p,
// or (1, 0) when p = 0.
[[nodiscard]] GrowthCertificate log_power_certificate(unsigned p);

[[nodiscard]] SeriesSpec constant_series(double c = 1.0);
[[nodiscard]] SeriesSpec identity_series();

// c_n = p_H(n), certificate (1, k - 1) from p_H(n) <= prod_{h != max H}(n/h + 1).
[[nodiscard]] SeriesSpec count_series(std::shared_ptr<const CountTable> table, unsigned k);
// c_n = p_H(n) for prime n, 0 otherwise.
[[nodiscard]] SeriesSpec prime_count_series(std::shared_ptr<const CountTable> table,
                                            std::shared_ptr<const ArithFnTable> primes,
                                            unsigned k);
// c_n = f(n) for an arithmetic table f; zero at n = 0.
[[nodiscard]] SeriesSpec arith_series(std::shared_ptr<const ArithFnTable> table);
// c_n = f(n) g(n).
[[nodiscard]] SeriesSpec arith_product_series(std::shared_ptr<const ArithFnTable> f,
                                              std::shared_ptr<const ArithFnTable> g);

// Named families exposed on the command line.
[[nodiscard]] const std::vector<std::string>& family_names();

struct FamilyRequest {
  std::string family;            // one of family_names()
  std::optional<PartSet> set;    // pH, pH_primes
  unsigned k = 1;                // lambda_k_weighted
  std::size_t coverage = 0;      // coefficient tables cover 0..coverage
  std::size_t sieve_limit = 0;   // if larger than coverage, sieve this far
  std::size_t sieve_cap = kDefaultSieveCap;
};

[[nodiscard]] GrowthCertificate family_certificate(const FamilyRequest& request);
// Builds the tables and the certified series. Throws DomainError for an unknown
// family or missing set.
[[nodiscard]] SeriesSpec make_family(const FamilyRequest& request);

// Smallest index (plus slack for the tail check cadence) at which the
// certificate's tail drops below rel_tol * value_floor at z.
[[nodiscard]] std::size_t suggested_coverage(const GrowthCertificate& cert, double z,
                                             double rel_tol, double value_floor = 0.1);

}  // namespace tauber
