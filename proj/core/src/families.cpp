#include "tauber/families.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "tauber/errors.hpp"

namespace tauber {

namespace {

unsigned log_power_of(const ArithFnTable& t) {
  switch (t.kind()) {
    case ArithKind::mobius:
    case ArithKind::prime_indicator:
      return 0;
    case ArithKind::vonmangoldt:
      return 1;
    case ArithKind::lambda_k:
      return t.k();
  }
  return 0;
}

std::function<double(std::size_t)> table_reader(std::shared_ptr<const ArithFnTable> t) {
  if (t->integer_valued()) {
    return [t](std::size_t n) { return static_cast<double>(t->ints()[n]); };
  }
  return [t](std::size_t n) { return t->reals()[n]; };
}

}  // namespace

double log_power_constant(double p, double delta) {
  if (p == 0.0) return 1.0;
  return std::pow(p / (delta * std::numbers::e), p);
}

GrowthCertificate log_power_certificate(unsigned p) {
  if (p == 0) return {1.0, 0.0};
  return {1.01 * log_power_constant(p), 1.0 + kLogSlack};
}

SeriesSpec constant_series(double c) {
  return {fmt::format("const[{}]", c), [c](std::size_t) { return c; }, {std::fabs(c), 0.0}, 0,
          kUnbounded};
}

SeriesSpec identity_series() {
  return {"n", [](std::size_t n) { return static_cast<double>(n); }, {1.0, 1.0}, 0, kUnbounded};
}

SeriesSpec count_series(std::shared_ptr<const CountTable> table, unsigned k) {
  const std::size_t coverage = table->limit();
  auto name = fmt::format("pH[{}]", table->source);
  return {std::move(name),
          [t = std::move(table)](std::size_t n) { return static_cast<double>(t->counts[n]); },
          {1.0, static_cast<double>(k) - 1.0},
          0,
          coverage};
}

SeriesSpec prime_count_series(std::shared_ptr<const CountTable> table,
                              std::shared_ptr<const ArithFnTable> primes, unsigned k) {
  if (primes->kind() != ArithKind::prime_indicator) {
    throw DomainError("prime_count_series: second table must be the prime indicator");
  }
  const std::size_t coverage = std::min(table->limit(), primes->limit());
  auto name = fmt::format("pH_primes[{}]", table->source);
  return {std::move(name),
          [t = std::move(table), p = std::move(primes)](std::size_t n) {
            return p->ints()[n] ? static_cast<double>(t->counts[n]) : 0.0;
          },
          {1.0, static_cast<double>(k) - 1.0},
          0,
          coverage};
}

SeriesSpec arith_series(std::shared_ptr<const ArithFnTable> table) {
  const std::size_t coverage = table->limit();
  const auto cert = log_power_certificate(log_power_of(*table));
  auto name = table->name();
  return {std::move(name), table_reader(std::move(table)), cert, 1, coverage};
}

SeriesSpec arith_product_series(std::shared_ptr<const ArithFnTable> f,
                                std::shared_ptr<const ArithFnTable> g) {
  const std::size_t coverage = std::min(f->limit(), g->limit());
  const auto cert = log_power_certificate(log_power_of(*f) + log_power_of(*g));
  auto name = fmt::format("{}*{}", f->name(), g->name());
  return {std::move(name),
          [a = table_reader(std::move(f)), b = table_reader(std::move(g))](std::size_t n) {
            return a(n) * b(n);
          },
          cert, 1, coverage};
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"pH", "pH_primes", "lambda", "lambda_sq",
                                                 "lambda_k_weighted"};
  return names;
}

namespace {

const PartSet& require_set(const FamilyRequest& request) {
  if (!request.set) {
    throw DomainError(fmt::format("family '{}' needs a part set", request.family));
  }
  return *request.set;
}

}  // namespace

GrowthCertificate family_certificate(const FamilyRequest& request) {
  const auto& f = request.family;
  if (f == "pH" || f == "pH_primes") {
    return {1.0, static_cast<double>(require_set(request).k()) - 1.0};
  }
  if (f == "lambda") return log_power_certificate(1);
  if (f == "lambda_sq") return log_power_certificate(2);
  if (f == "lambda_k_weighted") {
    if (request.k == 0) throw DomainError("lambda_k_weighted: k must be >= 1");
    return log_power_certificate(request.k + 1);
  }
  throw DomainError(fmt::format("unknown series family '{}'", f));
}

SeriesSpec make_family(const FamilyRequest& request) {
  const auto& f = request.family;
  (void)family_certificate(request);  // validates family name, set and k
  const std::size_t coverage = std::max<std::size_t>(request.coverage, 2);
  if (f == "pH") {
    const auto& set = require_set(request);
    return count_series(std::make_shared<const CountTable>(p_H_table(set, coverage)), set.k());
  }
  const FactorSieve sieve(std::max(coverage, request.sieve_limit), request.sieve_cap);
  if (f == "pH_primes") {
    const auto& set = require_set(request);
    return prime_count_series(std::make_shared<const CountTable>(p_H_table(set, coverage)),
                              std::make_shared<const ArithFnTable>(prime_indicator_table(sieve)),
                              set.k());
  }
  auto lambda = std::make_shared<const ArithFnTable>(von_mangoldt_table(sieve));
  if (f == "lambda") return arith_series(std::move(lambda));
  if (f == "lambda_sq") return arith_product_series(lambda, lambda);
  auto lambda_k = std::make_shared<const ArithFnTable>(lambda_k_table(sieve, request.k));
  return arith_product_series(std::move(lambda), std::move(lambda_k));
}

std::size_t suggested_coverage(const GrowthCertificate& cert, double z, double rel_tol,
                               double value_floor) {
  const double target = rel_tol * value_floor;
  std::size_t hi = 64;
  while (!(certified_tail(cert, z, hi) <= target)) {
    if (hi > (std::size_t{1} << 40)) {
      throw CapacityError(fmt::format("no feasible coverage for z = {}", z));
    }
    hi *= 2;
  }
  std::size_t lo = hi / 2;
  while (lo + 1 < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (certified_tail(cert, z, mid) <= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi + hi / 100 + 4096;
}

}  // namespace tauber
