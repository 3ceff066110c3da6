#include "tauber/bernoulli.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "tauber/errors.hpp"

namespace tauber {

namespace {

BigRational from_u64(std::uint64_t v) {
  BigInt z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return BigRational(z);
}

}  // namespace

RationalPoly::RationalPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  normalize();
}

RationalPoly RationalPoly::monomial(const BigRational& c, unsigned degree) {
  std::vector<BigRational> coeffs(degree + 1, BigRational(0));
  coeffs[degree] = c;
  return RationalPoly(std::move(coeffs));
}

void RationalPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RationalPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational RationalPoly::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPoly RationalPoly::shifted(const BigRational& shift) const {
  // sum_i c_i (x + s)^i = sum_j x^j sum_{i >= j} c_i C(i, j) s^{i-j}
  const std::size_t n = coeffs_.size();
  std::vector<BigRational> out(n, BigRational(0));
  std::vector<BigRational> shift_pow(n, BigRational(1));
  for (std::size_t i = 1; i < n; ++i) shift_pow[i] = shift_pow[i - 1] * shift;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      out[j] += coeffs_[i] * BigRational(binomial(static_cast<unsigned>(i),
                                                  static_cast<unsigned>(j))) *
                shift_pow[i - j];
    }
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return RationalPoly(std::move(out));
}

RationalPoly operator-(const RationalPoly& a, const RationalPoly& b) {
  std::vector<BigRational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly operator*(const BigRational& c, const RationalPoly& p) {
  std::vector<BigRational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return RationalPoly(std::move(out));
}

bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

std::string RationalPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ' ';
    out += coeffs_[i].get_str();
  }
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::vector<BigRational> bernoulli_numbers(unsigned k_max) {
  std::vector<BigRational> b(k_max + 1);
  b[0] = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    BigRational acc(0);
    for (unsigned j = 0; j < k; ++j) acc += BigRational(binomial(k + 1, j)) * b[j];
    b[k] = -acc / BigRational(k + 1);
    b[k].canonicalize();
  }
  return b;
}

RationalPoly bernoulli_poly(unsigned k) {
  const auto b = bernoulli_numbers(k);
  std::vector<BigRational> coeffs(k + 1, BigRational(0));
  for (unsigned j = 0; j <= k; ++j) coeffs[k - j] = BigRational(binomial(k, j)) * b[j];
  return RationalPoly(std::move(coeffs));
}

BigRational faulhaber_sum(unsigned k, std::uint64_t x) {
  if (k < 1) throw DomainError("faulhaber_sum: k must be >= 1");
  if (x < 1) throw DomainError("faulhaber_sum: x must be >= 1");
  const RationalPoly poly = bernoulli_poly(k + 1);
  BigRational out = (poly(from_u64(x) + 1) - poly(BigRational(0))) / BigRational(k + 1);
  out.canonicalize();
  return out;
}

BigRational thm23_main_term(const PartSet& set, std::uint64_t x) {
  const unsigned k = set.k();
  if (k < 2) {
    throw HypothesisError(fmt::format("thm23_main_term: |H| = {} but k >= 2 is required", k));
  }
  set.require_coprime("thm23_main_term");
  if (x < 1) throw DomainError("thm23_main_term: x must be positive");
  BigInt denom = BigInt(1);
  for (unsigned i = 2; i < k; ++i) denom *= i;  // (k-1)!
  BigInt prod = 1;
  for (const auto h : set.parts()) prod *= BigRational(from_u64(h)).get_num();
  denom *= prod;
  denom *= k;
  const RationalPoly poly = bernoulli_poly(k);
  BigRational out = (poly(from_u64(x) + 1) - poly(BigRational(0))) / BigRational(denom);
  out.canonicalize();
  return out;
}

}  // namespace tauber
