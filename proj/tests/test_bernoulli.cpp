#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tauber/bernoulli.hpp"
#include "tauber/errors.hpp"

using namespace tauber;

namespace {
BigRational q(long num, long den = 1) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_SUITE("bernoulli") {

TEST_CASE("Bernoulli numbers") {
  const auto b = bernoulli_numbers(30);
  CHECK(b[0] == 1);
  CHECK(b[1] == q(-1, 2));
  CHECK(b[2] == q(1, 6));
  CHECK(b[3] == 0);
  CHECK(b[4] == q(-1, 30));
  CHECK(b[12] == q(-691, 2730));
  for (unsigned j = 3; j <= 30; j += 2) REQUIRE(b[j] == 0);
  for (const auto& x : b) REQUIRE(x.get_den() > 0);
}

TEST_CASE("recurrence agrees with the generating-function series") {
  const auto b = bernoulli_numbers(20);
  const auto series = oracle::bernoulli_by_series(20);
  for (unsigned n = 0; n <= 20; ++n) REQUIRE(b[n] == series[n]);
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(bernoulli_poly(0) == RationalPoly({q(1)}));
  CHECK(bernoulli_poly(1) == RationalPoly({q(-1, 2), q(1)}));
  CHECK(bernoulli_poly(2) == RationalPoly({q(1, 6), q(-1), q(1)}));
  CHECK(bernoulli_poly(2).to_string() == "1/6 -1 1");
  for (unsigned k = 0; k <= 20; ++k) CHECK(bernoulli_poly(k).degree() == static_cast<int>(k));
}

TEST_CASE("difference identity B_k(x+1) - B_k(x) = k x^(k-1)") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 17);
  for (unsigned k = 1; k <= 20; ++k) {
    const RationalPoly p = bernoulli_poly(k);
    CHECK(p.shifted(q(1)) - p == RationalPoly::monomial(q(k), k - 1));
    for (int i = 0; i < 50; ++i) {
      const BigRational x = q(num(rng), den(rng));
      BigRational xp = 1;
      for (unsigned e = 1; e < k; ++e) xp *= x;
      REQUIRE(p(x + 1) - p(x) == BigRational(k) * xp);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  const RationalPoly a({q(1), q(1)});   // 1 + x
  const RationalPoly b({q(-1), q(1)});  // -1 + x
  CHECK(a * b == RationalPoly({q(-1), q(0), q(1)}));
  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a + b == RationalPoly({q(0), q(2)}));
  CHECK(q(1, 2) * a == RationalPoly({q(1, 2), q(1, 2)}));
  CHECK(RationalPoly({q(1), q(0), q(0)}).degree() == 0);
  CHECK(a.shifted(q(2)) == RationalPoly({q(3), q(1)}));
  CHECK(a(q(3, 2)) == q(5, 2));
}

TEST_CASE("Faulhaber sums") {
  CHECK(faulhaber_sum(1, 10) == 55);
  CHECK(faulhaber_sum(2, 10) == 385);
  CHECK(faulhaber_sum(3, 1) == 1);
  CHECK_THROWS_AS((void)faulhaber_sum(0, 3), DomainError);
  CHECK_THROWS_AS((void)faulhaber_sum(2, 0), DomainError);
}

TEST_CASE("Faulhaber sums equal brute-force power sums exactly") {
  for (unsigned k = 1; k <= 20; ++k) {
    for (std::uint64_t x = 1; x <= 100; ++x) {
      REQUIRE(faulhaber_sum(k, x) == BigRational(oracle::power_sum(k, x)));
    }
    REQUIRE(faulhaber_sum(k, 1000) == BigRational(oracle::power_sum(k, 1000)));
  }
}

TEST_CASE("partial-sum main term") {
  CHECK(thm23_main_term(PartSet({1, 2}), 10) == q(55, 2));
  CHECK(thm23_main_term(PartSet({1, 2}), 1) == q(1, 2));
  CHECK_THROWS_AS((void)thm23_main_term(PartSet({1}), 5), HypothesisError);
  CHECK_THROWS_AS((void)thm23_main_term(PartSet({2, 4}, GcdPolicy::any), 5), InvalidSetError);
  // k = 3: (1/6)(1/2)(B_3(x+1) - B_3(0))/3 = sum_{m<=x} m^2 / 12
  for (std::uint64_t x = 1; x <= 30; ++x) {
    REQUIRE(thm23_main_term(PartSet({1, 2, 3}), x) ==
            BigRational(oracle::power_sum(2, x)) / BigRational(12));
  }
}

}  // TEST_SUITE
