#pragma once

// Exact rational Bernoulli numbers and polynomials, Faulhaber power sums, and
// the closed-form main term for partial sums of p_H.
//
// Convention: B_1 = -1/2, i.e. the numbers generated by t / (e^t - 1).

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tauber/partitions.hpp"

namespace tauber {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Polynomial with exact rational coefficients, ascending degree. The
// representation is normalized: no trailing zero coefficients, so the zero
// polynomial has an empty coefficient list and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<BigRational> coeffs);

  [[nodiscard]] static RationalPoly monomial(const BigRational& c, unsigned degree);

  [[nodiscard]] const std::vector<BigRational>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  // Coefficient of x^i (zero past the degree).
  [[nodiscard]] BigRational coeff(std::size_t i) const;

  [[nodiscard]] BigRational operator()(const BigRational& x) const;
  // p(x + shift), expanded.
  [[nodiscard]] RationalPoly shifted(const BigRational& shift) const;

  friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend RationalPoly operator*(const BigRational& c, const RationalPoly& p);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b);

  // "c0 c1 ... cd" with each coefficient as an exact fraction, e.g. "1/6 -1 1".
  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();
  std::vector<BigRational> coeffs_;
};

[[nodiscard]] BigInt binomial(unsigned n, unsigned k);

// B_0..B_{k_max} from sum_{j=0}^{k} C(k+1, j) B_j = 0, B_0 = 1.
[[nodiscard]] std::vector<BigRational> bernoulli_numbers(unsigned k_max);

// B_k(x) = sum_j C(k, j) B_j x^{k-j}.
[[nodiscard]] RationalPoly bernoulli_poly(unsigned k);

// (B_{k+1}(x+1) - B_{k+1}(0)) / (k+1), which equals sum_{m=1}^{x} m^k.
// Requires k >= 1 and x >= 1.
[[nodiscard]] BigRational faulhaber_sum(unsigned k, std::uint64_t x);

// (1 / prod h) * (1 / (k-1)!) * (B_k(x+1) - B_k(0)) / k for k = |H| >= 2 and
// gcd(H) = 1.
[[nodiscard]] BigRational thm23_main_term(const PartSet& set, std::uint64_t x);

}  // namespace tauber
