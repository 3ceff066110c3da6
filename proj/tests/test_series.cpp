#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <random>

#include "tauber/errors.hpp"
#include "tauber/families.hpp"
#include "tauber/series.hpp"

using namespace tauber;

TEST_SUITE("series") {

TEST_CASE("closed-form evaluations") {
  const auto one = eval_series(constant_series(), 0.5, 1e-12);
  CHECK(std::fabs(one.value - 2.0) <= 2e-12);
  CHECK(one.tail_bound <= 1e-12 * one.value);

  const auto n = eval_series(identity_series(), 0.5, 1e-12);
  CHECK(std::fabs(n.value - 2.0) <= 2.0 * n.tail_bound + 1e-15);

  auto table = std::make_shared<const CountTable>(p_H_table(PartSet({1, 2}), 1000));
  const auto p = eval_series(count_series(table, 2), 0.5, 1e-12);
  CHECK(std::fabs(p.value - 8.0 / 3.0) <= 2.0 * p.tail_bound + 1e-15);
}

TEST_CASE("product oracle") {
  CHECK(product_oracle(PartSet({1}), 0.5) == doctest::Approx(2.0));
  CHECK(product_oracle(PartSet({1, 2}), 0.5) == doctest::Approx(8.0 / 3.0));
  const double z = 1.0 - 1e-6;
  CHECK(std::pow(1.0 - z, 3) * product_oracle(PartSet({1, 2, 3}), z) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-5));
}

TEST_CASE("property: certified tail is sound against closed forms") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> zdist(0.01, 0.9995);
  auto p123 = std::make_shared<const CountTable>(p_H_table(PartSet({1, 2, 3}), 200'000));
  const auto p_series = count_series(p123, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const double z = zdist(rng);
    const double tol = std::pow(10.0, -6.0 - static_cast<double>(rng() % 8));
    const auto g = eval_series(constant_series(), z, tol);
    REQUIRE(std::fabs(g.value - 1.0 / (1.0 - z)) <= 2.0 * g.tail_bound);
    const auto id = eval_series(identity_series(), z, tol);
    REQUIRE(std::fabs(id.value - z / ((1.0 - z) * (1.0 - z))) <= 2.0 * id.tail_bound);
    const auto ph = eval_series(p_series, z, tol);
    REQUIRE(std::fabs(ph.value - product_oracle(PartSet({1, 2, 3}), z)) <= 2.0 * ph.tail_bound);
    REQUIRE(ph.tail_bound <= tol * std::fabs(ph.value));
  }
}

TEST_CASE("certified tail bound is a true majorant") {
  // brute-force sum of the certificate terms far past the truncation point
  const GrowthCertificate cert{2.0, 1.5};
  const double z = 0.99;
  for (const std::size_t last : {500u, 1000u, 3000u}) {
    double brute = 0.0;
    for (std::size_t n = last + 1; n < last + 200'000; ++n) brute += cert.bound(n) * std::pow(z, n);
    CHECK(certified_tail(cert, z, last) >= brute);
    CHECK(certified_tail(cert, z, last) <= 10.0 * brute);
  }
  CHECK(std::isinf(certified_tail(cert, z, 10)));
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS((void)eval_series(constant_series(), 1.0, 1e-9), DomainError);
  CHECK_THROWS_AS((void)eval_series(constant_series(), 0.0, 1e-9), DomainError);
  CHECK_THROWS_AS((void)eval_series(constant_series(), 0.5, 1e-15), DomainError);
  CHECK_THROWS_AS((void)eval_series(constant_series(), 0.5, 0.1), DomainError);
  try {
    (void)eval_series(constant_series(), 0.9999, 1e-12, 1000);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("0.9999") != std::string::npos);
  }
  auto small = std::make_shared<const CountTable>(p_H_table(PartSet({1, 2}), 100));
  CHECK_THROWS_AS((void)eval_series(count_series(small, 2), 0.99, 1e-12), CapacityError);
}

TEST_CASE("summation by parts") {
  const auto a = summation_by_parts_check(constant_series(), 0.5, 10);
  CHECK(a.abs_diff <= 1e-12);
  auto p12 = std::make_shared<const CountTable>(p_H_table(PartSet({1, 2}), 500));
  const auto b = summation_by_parts_check(count_series(p12, 2), 0.9, 500);
  CHECK(b.abs_diff <= 1e-9 * std::fabs(b.lhs));
  const FactorSieve sieve(10'000);
  const auto lambda = arith_series(std::make_shared<const ArithFnTable>(von_mangoldt_table(sieve)));
  const auto c = summation_by_parts_check(lambda, 0.99, 10'000);
  CHECK(c.abs_diff <= 1e-9 * std::fabs(c.lhs));
  CHECK_THROWS_AS((void)summation_by_parts_check(lambda, 0.99, 10'001), CapacityError);
}

TEST_CASE("gamma") {
  CHECK(gamma_function(5.0) == 24.0);
  CHECK(gamma_function(1.0) == 1.0);
  CHECK(std::fabs(gamma_function(0.5) / std::sqrt(std::numbers::pi) - 1.0) <= 1e-12);
  CHECK(std::fabs(gamma_function(2.5) / (0.75 * std::sqrt(std::numbers::pi)) - 1.0) <= 1e-12);
  CHECK_THROWS_AS((void)gamma_function(0.0), DomainError);
}

TEST_CASE("envelopes") {
  const double z10 = 1.0 - std::ldexp(1.0, -10);
  CHECK(envelope_value(cor22_envelope(PartSet({1, 2, 3})), z10) ==
        doctest::Approx(154908200.467987).epsilon(1e-13));
  CHECK(envelope_value(thm31_envelope(1.0, 1), 1.0 - 1.0 / std::numbers::e) ==
        doctest::Approx(std::numbers::e).epsilon(1e-14));
  const double z = 0.9;
  auto one = [](double) { return 1.0; };
  CHECK(envelope_value(lemma11_envelope(1.0, 1.0, one, LemmaExponent::literal), z) ==
        doctest::Approx(100.0));
  CHECK(envelope_value(lemma11_envelope(1.0, 1.0, one, LemmaExponent::classical), z) ==
        doctest::Approx(10.0));
  CHECK(envelope_value(lemma11_envelope(2.0, 0.5, one), z) ==
        doctest::Approx(2.0 * std::tgamma(1.5) * std::sqrt(10.0)));
  CHECK(envelope_value(thm21_envelope(PartSet({1, 2}), [](double x) { return x + 1; }, "x+1"),
                       z) == doctest::Approx(10.0 * 11.0));
  CHECK(envelope_value(eq33_envelope(2), z) ==
        doctest::Approx(10.0 * std::log(10.0) * std::log(10.0)));
  CHECK(envelope_value(power_envelope(3.0), z) == doctest::Approx(1000.0));
  CHECK_THROWS_AS((void)envelope_value(power_envelope(1.0), 1.0), DomainError);
  CHECK_THROWS_AS((void)cor22_envelope(PartSet({2, 4}, GcdPolicy::any)), InvalidSetError);
  const Envelope bad(EnvelopeKind::power, "neg", [](double) { return -1.0; });
  CHECK_THROWS_AS((void)envelope_value(bad, 0.5), DomainError);
}

TEST_CASE("grids") {
  const auto g = EvalGrid::dyadic(4, 14);
  CHECK(g.size() == 11);
  CHECK(g.points().front().z == 1.0 - 1.0 / 16.0);
  CHECK(g.points().back().j == 14);
  CHECK_THROWS_AS((void)EvalGrid::dyadic(5, 4), DomainError);
  CHECK_THROWS_AS(EvalGrid({{1, 0.5}, {2, 0.5}}), DomainError);
  CHECK_THROWS_AS(EvalGrid({{1, 1.5}}), DomainError);
}

TEST_CASE("sweep: geometric series against the classical lemma envelope") {
  const auto env = lemma11_envelope(1.0, 1.0, [](double) { return 1.0; });
  const auto report = ratio_sweep(constant_series(), env, EvalGrid::dyadic(4, 12), 1e-12);
  REQUIRE(report.rows.size() == 9);
  CHECK(std::fabs(report.rows.back().ratio - 1.0) <= 1e-6);
  for (const auto& row : report.rows) CHECK(row.tail_bound <= 1e-12 * row.value);
}

TEST_CASE("sweep: p_{1,2,3} plateau approaches 1/6") {
  const PartSet set({1, 2, 3});
  FamilyRequest req{"pH", set};
  const double z12 = 1.0 - std::ldexp(1.0, -12);
  req.coverage = suggested_coverage(family_certificate(req), z12, 1e-12);
  const auto report = ratio_sweep(make_family(req), power_envelope(3.0), EvalGrid::dyadic(4, 12),
                                  1e-12);
  CHECK(std::fabs(report.rows.back().ratio * 6.0 - 1.0) <= 0.02);
  const auto [lo, hi] = report.plateau();
  CHECK(lo <= hi);
  CHECK(hi * 6.0 <= 1.2);
}

TEST_CASE("sweep: von Mangoldt series against (1-z)^-1") {
  FamilyRequest req{"lambda", std::nullopt};
  const double z13 = 1.0 - std::ldexp(1.0, -13);
  req.coverage = suggested_coverage(family_certificate(req), z13, 1e-12);
  const auto spec = make_family(req);
  const auto report = ratio_sweep(spec, power_envelope(1.0), EvalGrid::dyadic(8, 13), 1e-12);
  CHECK(report.rows.back().ratio >= 0.95);
  CHECK(report.rows.back().ratio <= 1.05);
}

TEST_CASE("sweep is independent of the worker count") {
  FamilyRequest req{"lambda_sq", std::nullopt};
  req.coverage = suggested_coverage(family_certificate(req), 1.0 - std::ldexp(1.0, -11), 1e-12);
  const auto spec = make_family(req);
  const auto grid = EvalGrid::dyadic(4, 11);
  const auto serial = ratio_sweep(spec, eq33_envelope(1), grid, 1e-12, 1);
  const auto parallel = ratio_sweep(spec, eq33_envelope(1), grid, 1e-12, 4);
  REQUIRE(serial.rows.size() == parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    CHECK(serial.rows[i].value == parallel.rows[i].value);
    CHECK(serial.rows[i].last_index == parallel.rows[i].last_index);
  }
}

TEST_CASE("sweep annotates capacity errors with the grid index") {
  auto small = std::make_shared<const CountTable>(p_H_table(PartSet({1, 2}), 5000));
  try {
    (void)ratio_sweep(count_series(small, 2), power_envelope(2.0), EvalGrid::dyadic(4, 12), 1e-12);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("grid point j = ") != std::string::npos);
  }
}

}  // TEST_SUITE
