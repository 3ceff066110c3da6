#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "tauber/partitions.hpp"

using namespace tauber;

TEST_SUITE("partitions") {

TEST_CASE("part set validation") {
  CHECK_THROWS_AS(PartSet({}), InvalidSetError);
  CHECK_THROWS_AS(PartSet({0, 1}), InvalidSetError);
  CHECK_THROWS_AS(PartSet({1, 2, 2}), InvalidSetError);
  CHECK_THROWS_AS(PartSet({2, 4}), InvalidSetError);
  CHECK_NOTHROW(PartSet({2, 4}, GcdPolicy::any));

  const PartSet set({3, 1, 2});
  CHECK(set.k() == 3);
  CHECK(set.prod() == 6);
  CHECK(set.to_string() == "{1,2,3}");
  CHECK(PartSet({6, 10, 15}).coprime());

  CHECK(parse_part_set(" 1, 2 ,3", GcdPolicy::require_coprime).to_string() == "{1,2,3}");
  CHECK_THROWS_AS((void)parse_part_set("1,,2", GcdPolicy::any), InvalidSetError);
  CHECK_THROWS_AS((void)parse_part_set("1,x", GcdPolicy::any), InvalidSetError);
  CHECK_THROWS_AS((void)parse_part_set("2,4", GcdPolicy::require_coprime), InvalidSetError);
}

TEST_CASE("p_H examples") {
  CHECK(p_H_table(PartSet({1}), 17)[17] == 1);
  CHECK(p_H_table(PartSet({1, 2}), 5)[5] == 3);
  CHECK(p_H_table(PartSet({1, 2, 3}), 6)[6] == 7);
  CHECK(p_H_table(PartSet({2, 3}, GcdPolicy::any), 0)[0] == 1);
  CHECK(p_H_table(PartSet({1, 2}), 5).counts == std::vector<std::uint64_t>{1, 1, 2, 2, 3, 3});
  CHECK(p_H_table(PartSet({2, 4}, GcdPolicy::any), 9)[9] == 0);
}

TEST_CASE("p_m examples") {
  CHECK(p_m_table(1, 9)[9] == 1);
  CHECK(p_m_table(2, 5)[5] == 3);
  CHECK(p_m_table(5, 5)[5] == 7);
  CHECK(p_m_table(3, 0).source == "m=3");
}

TEST_CASE("brute force enumerator") {
  CHECK(brute_force_p_H(PartSet({2, 3}, GcdPolicy::any), 7) == 1);
  CHECK(brute_force_p_H(PartSet({2, 3}, GcdPolicy::any), 1) == 0);
  CHECK(brute_force_p_H(PartSet({1, 2, 3}), 6) == 7);
  CHECK(brute_force_p_H(PartSet({1, 2, 3}), 60) == oracle::partitions({1, 2, 3}, 60));
  CHECK_THROWS_AS((void)brute_force_p_H(PartSet({1}), 61), RefusalError);
}

TEST_CASE("DP agrees with both oracles on the test family") {
  const std::vector<std::vector<std::uint64_t>> family = {{1},       {1, 2},    {2, 3},
                                                          {1, 2, 3}, {3, 4, 5}, {1, 5, 6}};
  for (const auto& parts : family) {
    const PartSet set(parts, GcdPolicy::any);
    const auto table = p_H_table(set, 40);
    for (std::uint64_t n = 0; n <= 40; ++n) {
      REQUIRE(table[n] == brute_force_p_H(set, n));
      REQUIRE(table[n] == oracle::partitions(parts, n));
    }
  }
}

TEST_CASE("property: DP agrees with nested-loop oracle on random sets") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_int_distribution<std::uint64_t> part(1, 12);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> parts;
    const int k = size(rng);
    while (static_cast<int>(parts.size()) < k) {
      const auto h = part(rng);
      if (std::find(parts.begin(), parts.end(), h) == parts.end()) parts.push_back(h);
    }
    const PartSet set(parts, GcdPolicy::any);
    const auto table = p_H_table(set, 50);
    for (std::uint64_t n = 0; n <= 50; ++n) {
      std::vector<std::uint64_t> sorted(set.parts().begin(), set.parts().end());
      REQUIRE(table[n] == oracle::partitions(sorted, n));
    }
  }
}

TEST_CASE("p_m(n) <= (n+1)^m") {
  for (unsigned m = 1; m <= 5; ++m) {
    const auto table = p_m_table(m, 1000);
    for (std::uint64_t n = 0; n <= 1000; ++n) {
      std::uint64_t bound = 1;
      for (unsigned i = 0; i < m; ++i) bound *= n + 1;
      REQUIRE(table[n] <= bound);
    }
  }
}

TEST_CASE("overflow raises instead of wrapping") {
  // p_m(n) with m = n is the unrestricted p(n); p(500) ~ 2.3e21 > 2^64
  CHECK_THROWS_AS((void)p_m_table(500, 500), OverflowError);
  CHECK_THROWS_AS((void)p_H_table(PartSet({1}), 11, 10), CapacityError);
}

TEST_CASE("asymptotic main term") {
  CHECK(asymptotic_main_term(PartSet({1, 2}), 100) == doctest::Approx(50.0));
  CHECK(asymptotic_main_term(PartSet({1}), 7) == 1.0);
  CHECK(asymptotic_main_term(PartSet({1, 2, 3}), 600) == doctest::Approx(30000.0));
  CHECK_THROWS_AS((void)asymptotic_main_term(PartSet({2, 4}, GcdPolicy::any), 10),
                  InvalidSetError);
}

TEST_CASE("main term convergence for H={1,2,3}") {
  const PartSet set({1, 2, 3});
  const auto table = p_H_table(set, 10'000);
  auto err = [&](std::uint64_t n) {
    return std::fabs(static_cast<double>(table[n]) * 12.0 / (double(n) * double(n)) - 1.0);
  };
  CHECK(err(10'000) <= 0.01);
  CHECK(err(10'000) <= err(100) / 5.0);
}

TEST_CASE("partial sums examples") {
  const auto p12 = p_H_table(PartSet({1, 2}), 10);
  const std::vector<std::int64_t> ones(11, 1);
  const auto s = partial_sums(std::span<const std::int64_t>(ones),
                              std::span<const std::uint64_t>(p12.counts), 10);
  CHECK(s.sums[4] == 9);
  CHECK(s.sums[0] == static_cast<std::int64_t>(p12[0]));

  const std::vector<std::int8_t> primes = {0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0};
  const auto sp = partial_sums(std::span<const std::int8_t>(primes),
                               std::span<const std::uint64_t>(p12.counts), 10);
  CHECK(sp.sums[1] == 0);
  CHECK(sp.sums[3] == 2 + 2);

  const std::vector<double> reals(11, 0.5);
  const auto sr = partial_sums(std::span<const double>(reals),
                               std::span<const std::uint64_t>(p12.counts), 10);
  CHECK(sr.sums[4] == doctest::Approx(4.5));
}

TEST_CASE("partial sums shape and overflow errors") {
  const std::vector<std::int64_t> a(5, 1);
  const std::vector<std::int64_t> b(6, 1);
  CHECK_THROWS_AS((void)partial_sums(std::span<const std::int64_t>(a),
                                     std::span<const std::int64_t>(b), 4),
                  ShapeError);
  CHECK_THROWS_AS((void)partial_sums(std::span<const std::int64_t>(a),
                                     std::span<const std::int64_t>(a), 5),
                  ShapeError);
  const std::vector<std::int64_t> big(3, INT64_MAX / 2 + 1);
  CHECK_THROWS_AS((void)partial_sums(std::span<const std::int64_t>(big),
                                     std::span<const std::int64_t>(std::vector<std::int64_t>(3, 1)), 2),
                  OverflowError);
}

TEST_CASE("property: partial sum differences recover the products") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> val(-1000, 1000);
  std::uniform_real_distribution<double> real(-3.0, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    std::vector<std::int64_t> a(n + 1);
    std::vector<std::int64_t> b(n + 1);
    std::vector<double> r(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      a[i] = val(rng);
      b[i] = val(rng);
      r[i] = real(rng);
    }
    const auto s = partial_sums(std::span<const std::int64_t>(a),
                                std::span<const std::int64_t>(b), n);
    const auto sr = partial_sums(std::span<const double>(r), std::span<const std::int64_t>(b), n);
    for (std::size_t x = 1; x <= n; ++x) {
      REQUIRE(s.sums[x] - s.sums[x - 1] == a[x] * b[x]);
      REQUIRE(sr.sums[x] - sr.sums[x - 1] ==
              doctest::Approx(r[x] * static_cast<double>(b[x])).epsilon(1e-9).scale(1e3));
    }
  }
}

}  // TEST_SUITE
