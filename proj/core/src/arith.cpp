#include "tauber/arith.hpp"

#include <cmath>

#include <fmt/format.h>

#include "tauber/errors.hpp"
#include "tauber/summation.hpp"

namespace tauber {

FactorSieve::FactorSieve(std::size_t limit, std::size_t cap) {
  if (limit < 2 || limit > cap) {
    throw CapacityError(fmt::format("sieve limit {} outside [2, {}]", limit, cap));
  }
  if (limit > std::size_t{UINT32_MAX} - 1) {
    throw CapacityError(fmt::format("sieve limit {} exceeds 32-bit factor storage", limit));
  }
  spf_.assign(limit + 1, 0);
  spf_[1] = 1;
  for (std::size_t n = 2; n <= limit; ++n) {
    if (spf_[n] == 0) {
      spf_[n] = static_cast<std::uint32_t>(n);
      primes_.push_back(static_cast<std::uint32_t>(n));
    }
    const std::uint32_t p_n = spf_[n];
    for (const std::uint32_t p : primes_) {
      if (p > p_n || std::size_t{p} * n > limit) break;
      spf_[std::size_t{p} * n] = p;
    }
  }
}

std::vector<PrimePower> FactorSieve::factorize(std::size_t n) const {
  if (n == 0 || n > limit()) {
    throw DomainError(fmt::format("factorize: {} outside [1, {}]", n, limit()));
  }
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

unsigned FactorSieve::omega(std::size_t n) const {
  if (n == 0 || n > limit()) {
    throw DomainError(fmt::format("omega: {} outside [1, {}]", n, limit()));
  }
  unsigned count = 0;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    while (n % p == 0) n /= p;
    ++count;
  }
  return count;
}

std::string to_string(ArithKind kind) {
  switch (kind) {
    case ArithKind::mobius: return "mobius";
    case ArithKind::vonmangoldt: return "vonmangoldt";
    case ArithKind::lambda_k: return "lambda_k";
    case ArithKind::prime_indicator: return "prime_indicator";
  }
  return "unknown";
}

ArithFnTable::ArithFnTable(ArithKind kind, unsigned k, IntValues values)
    : kind_(kind), k_(k), values_(std::move(values)) {}

ArithFnTable::ArithFnTable(ArithKind kind, unsigned k, RealValues values)
    : kind_(kind), k_(k), values_(std::move(values)) {}

std::size_t ArithFnTable::limit() const noexcept {
  return std::visit([](const auto& v) { return v.size() - 1; }, values_);
}

std::string ArithFnTable::name() const {
  if (kind_ == ArithKind::lambda_k) return fmt::format("lambda_{}", k_);
  return to_string(kind_);
}

double ArithFnTable::operator[](std::size_t n) const {
  return std::visit([n](const auto& v) { return static_cast<double>(v.at(n)); }, values_);
}

ArithFnTable mobius_table(const FactorSieve& sieve) {
  const std::size_t limit = sieve.limit();
  ArithFnTable::IntValues mu(limit + 1, 0);
  mu[1] = 1;
  for (std::size_t n = 2; n <= limit; ++n) {
    const std::size_t p = sieve.spf(n);
    const std::size_t rest = n / p;
    // mu(p * rest) = -mu(rest) unless p | rest
    mu[n] = (rest % p == 0) ? 0 : static_cast<std::int8_t>(-mu[rest]);
  }
  return {ArithKind::mobius, 0, std::move(mu)};
}

ArithFnTable von_mangoldt_table(const FactorSieve& sieve) {
  const std::size_t limit = sieve.limit();
  ArithFnTable::RealValues lambda(limit + 1, 0.0);
  for (const std::uint32_t p : sieve.primes()) {
    const double lp = std::log(static_cast<double>(p));
    for (std::size_t q = p; q <= limit; q *= p) {
      lambda[q] = lp;
      if (q > limit / p) break;
    }
  }
  return {ArithKind::vonmangoldt, 1, std::move(lambda)};
}

ArithFnTable lambda_k_table(const FactorSieve& sieve, unsigned k) {
  if (k == 0) throw DomainError("lambda_k_table: k must be >= 1");
  const std::size_t limit = sieve.limit();
  ArithFnTable::RealValues values(limit + 1, 0.0);
  std::vector<double> log_p;
  for (std::size_t n = 2; n <= limit; ++n) {
    const auto factors = sieve.factorize(n);
    log_p.clear();
    double log_n = 0.0;
    for (const auto& [p, e] : factors) {
      const double lp = std::log(static_cast<double>(p));
      log_p.push_back(lp);
      log_n += e * lp;
    }
    // Squarefree divisors d are subsets of the distinct primes.
    const std::size_t subsets = std::size_t{1} << factors.size();
    CompensatedSum sum;
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      double log_d = 0.0;
      int sign = 1;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (mask & (std::size_t{1} << i)) {
          log_d += log_p[i];
          sign = -sign;
        }
      }
      const double l = log_n - log_d;
      double term = 1.0;
      for (unsigned j = 0; j < k; ++j) term *= l;
      sum.add(sign * term);
    }
    values[n] = sum.value();
  }
  return {ArithKind::lambda_k, k, std::move(values)};
}

ArithFnTable prime_indicator_table(const FactorSieve& sieve) {
  const std::size_t limit = sieve.limit();
  ArithFnTable::IntValues ind(limit + 1, 0);
  for (const std::uint32_t p : sieve.primes()) ind[p] = 1;
  return {ArithKind::prime_indicator, 0, std::move(ind)};
}

PrimeSummaryTable prime_summaries(const FactorSieve& sieve) {
  const std::size_t limit = sieve.limit();
  const ArithFnTable lambda = von_mangoldt_table(sieve);
  const auto lam = lambda.reals();

  PrimeSummaryTable out;
  out.pi.assign(limit + 1, 0);
  out.psi.assign(limit + 1, 0.0);
  std::uint32_t count = 0;
  CompensatedSum psi;
  for (std::size_t x = 1; x <= limit; ++x) {
    if (sieve.is_prime(x)) ++count;
    psi.add(lam[x]);
    out.pi[x] = count;
    out.psi[x] = psi.value();
  }
  return out;
}

}  // namespace tauber
