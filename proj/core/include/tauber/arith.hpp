#pragma once

// Sieve-based tables of the arithmetic functions: smallest prime factor,
// Moebius, von Mangoldt, generalized von Mangoldt Lambda_k, prime indicator,
// pi(x) and psi(x).
//
// All tables are indexed 0..limit. Index 0 carries no arithmetic meaning and
// holds 0; the functions themselves are defined on 1..limit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tauber {

inline constexpr std::size_t kDefaultSieveCap = 50'000'000;

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;
};

class FactorSieve {
 public:
  // Linear sieve. Throws CapacityError if limit < 2 or limit > cap.
  explicit FactorSieve(std::size_t limit, std::size_t cap = kDefaultSieveCap);

  [[nodiscard]] std::size_t limit() const noexcept { return spf_.size() - 1; }

  // Smallest prime factor of n, 2 <= n <= limit.
  [[nodiscard]] std::uint32_t spf(std::size_t n) const { return spf_.at(n); }
  [[nodiscard]] bool is_prime(std::size_t n) const {
    return n >= 2 && spf_.at(n) == n;
  }
  [[nodiscard]] std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  // Prime factorization in increasing prime order; empty for n = 1.
  [[nodiscard]] std::vector<PrimePower> factorize(std::size_t n) const;
  // Number of distinct prime factors.
  [[nodiscard]] unsigned omega(std::size_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

enum class ArithKind { mobius, vonmangoldt, lambda_k, prime_indicator };

[[nodiscard]] std::string to_string(ArithKind kind);

class ArithFnTable {
 public:
  using IntValues = std::vector<std::int8_t>;
  using RealValues = std::vector<double>;

  ArithFnTable(ArithKind kind, unsigned k, IntValues values);
  ArithFnTable(ArithKind kind, unsigned k, RealValues values);

  [[nodiscard]] ArithKind kind() const noexcept { return kind_; }
  // Order of Lambda_k; 1 for vonmangoldt, 0 for the integer-valued kinds.
  [[nodiscard]] unsigned k() const noexcept { return k_; }
  [[nodiscard]] std::size_t limit() const noexcept;
  [[nodiscard]] bool integer_valued() const noexcept {
    return std::holds_alternative<IntValues>(values_);
  }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] double operator[](std::size_t n) const;

  // Direct access for hot loops. Throws std::bad_variant_access on the wrong kind.
  [[nodiscard]] std::span<const std::int8_t> ints() const { return std::get<IntValues>(values_); }
  [[nodiscard]] std::span<const double> reals() const { return std::get<RealValues>(values_); }

 private:
  ArithKind kind_;
  unsigned k_;
  std::variant<IntValues, RealValues> values_;
};

struct PrimeSummaryTable {
  std::vector<std::uint32_t> pi;  // pi[x] = #{p <= x}
  std::vector<double> psi;        // psi[x] = sum_{n <= x} Lambda(n)

  [[nodiscard]] std::size_t limit() const noexcept { return pi.size() - 1; }
};

[[nodiscard]] ArithFnTable mobius_table(const FactorSieve& sieve);
[[nodiscard]] ArithFnTable von_mangoldt_table(const FactorSieve& sieve);
// Lambda_k(n) = sum_{d | n} mu(d) log(n/d)^k, summed over the squarefree
// divisors of n (the only ones with mu(d) != 0). Requires k >= 1.
[[nodiscard]] ArithFnTable lambda_k_table(const FactorSieve& sieve, unsigned k);
[[nodiscard]] ArithFnTable prime_indicator_table(const FactorSieve& sieve);
[[nodiscard]] PrimeSummaryTable prime_summaries(const FactorSieve& sieve);

}  // namespace tauber
