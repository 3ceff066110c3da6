#include "tauber/suites.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "tauber/bernoulli.hpp"
#include "tauber/errors.hpp"
#include "tauber/families.hpp"
#include "tauber/partitions.hpp"
#include "tauber/series.hpp"

namespace tauber {

bool SuiteResult::overall() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string g6(double v) { return fmt::format("{:.6g}", v); }

const std::vector<std::vector<std::uint64_t>>& oracle_family() {
  static const std::vector<std::vector<std::uint64_t>> sets = {
      {1}, {1, 2}, {2, 3}, {1, 2, 3}, {3, 4, 5}, {1, 5, 6}};
  return sets;
}

int depth(const SuiteOptions& opt, int natural) {
  return opt.j_max > 0 ? std::min(opt.j_max, natural) : natural;
}

// A check that hits a domain error fails rather than aborting the suite;
// capacity errors propagate so the caller can report them as such.
template <class F>
std::vector<Check> guarded(std::string name, std::string anchor, F&& body) {
  try {
    return body();
  } catch (const CapacityError&) {
    throw;
  } catch (const Error& e) {
    return {{std::move(name), std::move(anchor), false, fmt::format("error: {}", e.what()), "-"}};
  }
}

SeriesSpec sized_family(FamilyRequest request, double z_max, const SuiteOptions& opt) {
  request.coverage = suggested_coverage(family_certificate(request), z_max, opt.rel_tol);
  request.sieve_cap = opt.sieve_cap;
  return make_family(request);
}

// --- partitions -----------------------------------------------------------

std::vector<Check> partition_oracle(const SuiteOptions&) {
  std::vector<Check> out;
  for (const auto& parts : oracle_family()) {
    const PartSet set(parts, GcdPolicy::any);
    const CountTable table = p_H_table(set, 40);
    int mismatches = 0;
    for (std::uint64_t n = 0; n <= 40; ++n) {
      if (table[n] != brute_force_p_H(set, n)) ++mismatches;
    }
    out.push_back({fmt::format("dp_equals_enumeration H={} n<=40", set.to_string()), "Thm2.1",
                   mismatches == 0, fmt::format("mismatches={}", mismatches), "0"});
  }
  return out;
}

std::vector<Check> generating_function(const SuiteOptions& opt) {
  std::vector<Check> out;
  constexpr double z = 0.5;
  for (const auto& parts : oracle_family()) {
    const PartSet set(parts, GcdPolicy::any);
    const FamilyRequest req{"pH", set};
    const SeriesSpec spec = sized_family(req, z, opt);
    const EvalResult r = eval_series(spec, z, opt.rel_tol);
    const double diff = std::fabs(r.value - product_oracle(set, z));
    out.push_back({fmt::format("series_equals_product H={} z=1/2", set.to_string()), "Thm2.1/GF",
                   diff <= 1e-9, g6(diff), "1e-09"});
  }
  return out;
}

std::vector<Check> main_term_convergence(const SuiteOptions&) {
  const PartSet set({1, 2, 3});
  const CountTable table = p_H_table(set, 10'000);
  auto rel_err = [&](std::uint64_t n) {
    return std::fabs(static_cast<double>(table[n]) / asymptotic_main_term(set, n) - 1.0);
  };
  const double e2 = rel_err(100);
  const double e4 = rel_err(10'000);
  return {
      {"main_term_rel_error H={1,2,3} n=1e4", "Eq2.2", e4 <= 0.01, g6(e4), "0.01"},
      {"main_term_error_decay err(1e4)/err(1e2)", "Eq2.2", e4 <= e2 / 5.0, g6(e4 / e2), "0.2"},
  };
}

std::vector<Check> max_parts_bound(const SuiteOptions&) {
  std::vector<Check> out;
  for (unsigned m = 1; m <= 5; ++m) {
    const CountTable table = p_m_table(m, 1000);
    int violations = 0;
    for (std::uint64_t n = 0; n <= 1000; ++n) {
      // (n+1)^m <= 1001^5 fits in 64 bits
      std::uint64_t bound = 1;
      for (unsigned i = 0; i < m; ++i) bound *= n + 1;
      if (table[n] > bound) ++violations;
    }
    out.push_back({fmt::format("p_m(n) <= (n+1)^m m={} n<=1000", m), "Sec2/pm", violations == 0,
                   fmt::format("violations={}", violations), "0"});
  }
  return out;
}

// --- bernoulli ------------------------------------------------------------

std::vector<Check> faulhaber_exact(const SuiteOptions&) {
  std::vector<std::uint64_t> xs(100);
  for (std::uint64_t i = 0; i < 100; ++i) xs[i] = i + 1;
  xs.push_back(1000);
  int mismatches = 0;
  int cases = 0;
  for (unsigned k = 1; k <= 20; ++k) {
    for (const auto x : xs) {
      BigInt brute = 0;
      for (std::uint64_t m = 1; m <= x; ++m) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), m, k);
        brute += p;
      }
      ++cases;
      if (faulhaber_sum(k, x) != BigRational(brute)) ++mismatches;
    }
  }
  return {{fmt::format("faulhaber_equals_power_sum k<=20 ({} cases)", cases), "Eq2.9",
           mismatches == 0, fmt::format("mismatches={}", mismatches), "0"}};
}

std::vector<Check> thm23_error_band(const SuiteOptions&) {
  const PartSet set({1, 2, 3});
  const std::vector<std::uint64_t> xs = {100, 1000, 10'000};
  const CountTable table = p_H_table(set, xs.back());
  std::vector<double> by_x;
  std::vector<double> by_x2;
  BigInt running = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 1; n <= xs.back(); ++n) {
    running += BigInt(std::to_string(table[n]));
    if (n == xs[next]) {
      const BigRational err = abs(BigRational(running) - thm23_main_term(set, n));
      const double e = err.get_d();
      by_x.push_back(e / static_cast<double>(n));
      by_x2.push_back(e / (static_cast<double>(n) * static_cast<double>(n)));
      ++next;
    }
  }
  const auto [lo, hi] = std::minmax_element(by_x.begin(), by_x.end());
  const double spread = *hi / *lo;
  return {{"partial_sum_error/x bounded H={1,2,3} x=1e2,1e3,1e4", "Thm2.3", spread <= 10.0,
           fmt::format("max/min={} (E/x: {},{},{}; E/x^2: {},{},{})", g6(spread), g6(by_x[0]),
                       g6(by_x[1]), g6(by_x[2]), g6(by_x2[0]), g6(by_x2[1]), g6(by_x2[2])),
           "10"}};
}

std::vector<Check> bernoulli_structure(const SuiteOptions&) {
  const auto b = bernoulli_numbers(30);
  int odd_nonzero = 0;
  for (unsigned j = 3; j <= 30; j += 2) {
    if (b[j] != 0) ++odd_nonzero;
  }
  int diff_failures = 0;
  for (unsigned k = 1; k <= 20; ++k) {
    const RationalPoly p = bernoulli_poly(k);
    const RationalPoly expected = RationalPoly::monomial(BigRational(k), k - 1);
    if (p.shifted(BigRational(1)) - p != expected) ++diff_failures;
  }
  return {
      {"odd_bernoulli_vanish 3<=j<=30", "Sec2/GF", odd_nonzero == 0,
       fmt::format("nonzero={}", odd_nonzero), "0"},
      {"B_k(x+1)-B_k(x) = k x^(k-1) k<=20", "Eq2.9", diff_failures == 0,
       fmt::format("failures={}", diff_failures), "0"},
  };
}

// --- tauberian ------------------------------------------------------------

std::vector<Check> thm21_limit(const SuiteOptions& opt) {
  const int j = depth(opt, 14);
  const double z = 1.0 - std::ldexp(1.0, -j);
  std::vector<Check> out;
  for (const std::vector<std::uint64_t>& parts : {std::vector<std::uint64_t>{1, 2},
                                                  std::vector<std::uint64_t>{1, 2, 3}}) {
    const PartSet set(parts);
    auto checks = guarded(fmt::format("limit_form H={}", set.to_string()), "Thm2.1", [&] {
      const SeriesSpec spec = sized_family({"pH", set}, z, opt);
      const EvalResult r = eval_series(spec, z, opt.rel_tol);
      const double scaled = std::pow(1.0 - z, set.k()) * r.value;
      const double target = 1.0 / static_cast<double>(set.prod());
      const double rel = std::fabs(scaled / target - 1.0);
      return std::vector<Check>{
          {fmt::format("(1-z)^k*sum -> 1/prod(H) H={} j={}", set.to_string(), j), "Thm2.1",
           rel <= 0.02, fmt::format("{} (rel.dev {})", g6(scaled), g6(rel)), "2% of " + g6(target)}};
    });
    out.insert(out.end(), checks.begin(), checks.end());
  }
  return out;
}

std::vector<Check> band_check(const std::string& label, const std::string& anchor,
                              const SeriesSpec& spec, const Envelope& env, int j_lo, int j_hi,
                              double max_spread, const SuiteOptions& opt) {
  const RatioReport report = ratio_sweep(spec, env, EvalGrid::dyadic(j_lo, j_hi), opt.rel_tol,
                                         opt.threads);
  const auto [lo, hi] = report.band();
  const double spread = hi / lo;
  return {{fmt::format("{} j={}..{}", label, j_lo, j_hi), anchor, spread <= max_spread,
           fmt::format("max/min={} (ratio {}..{})", g6(spread), g6(lo), g6(hi)),
           g6(max_spread)}};
}

std::vector<Check> cor22_band(const SuiteOptions& opt) {
  return guarded("prime_indexed_band", "Cor2.2", [&] {
    const int j_hi = depth(opt, 16);
    const int j_lo = std::min(8, j_hi);
    const PartSet set({1, 2});
    FamilyRequest req{"pH_primes", set};
    req.sieve_limit = opt.sieve_limit;
    const SeriesSpec spec = sized_family(req, 1.0 - std::ldexp(1.0, -j_hi), opt);
    return band_check(
        fmt::format("sum_p p_H(p) z^p / cor22 envelope H={{1,2}} sieve={}", opt.sieve_limit),
        "Cor2.2", spec,
                      cor22_envelope(set), j_lo, j_hi, 2.0, opt);
  });
}

std::vector<Check> hardy_littlewood(const SuiteOptions& opt) {
  return guarded("hardy_littlewood_pnt", "Sec3/HL", [&] {
    const int j = depth(opt, 13);
    const double z = 1.0 - std::ldexp(1.0, -j);
    const SeriesSpec spec = sized_family({"lambda", std::nullopt}, z, opt);
    const EvalResult r = eval_series(spec, z, opt.rel_tol);
    const double scaled = (1.0 - z) * r.value;
    return std::vector<Check>{{fmt::format("(1-z)*sum Lambda(n) z^n j={}", j), "Sec3/HL",
                               scaled >= 0.95 && scaled <= 1.05, g6(scaled), "[0.95,1.05]"}};
  });
}

std::vector<Check> eq33_k1_band(const SuiteOptions& opt) {
  return guarded("lambda_squared_band", "Eq3.3", [&] {
    const int j_hi = depth(opt, 14);
    const int j_lo = std::min(8, j_hi);
    const SeriesSpec spec = sized_family({"lambda_sq", std::nullopt}, 1.0 - std::ldexp(1.0, -j_hi), opt);
    return band_check("sum Lambda^2(n) z^n / eq33(k=1) envelope", "Eq3.3", spec,
                      eq33_envelope(1), j_lo, j_hi, 3.0, opt);
  });
}

std::vector<Check> eq33_k2_band(const SuiteOptions& opt) {
  return guarded("lambda_lambda2_band", "Thm3.1", [&] {
    const int j_hi = depth(opt, 14);
    const int j_lo = std::min(8, j_hi);
    FamilyRequest req{"lambda_k_weighted", std::nullopt};
    req.k = 2;
    const SeriesSpec spec = sized_family(req, 1.0 - std::ldexp(1.0, -j_hi), opt);
    return band_check("sum Lambda(n) Lambda_2(n) z^n / eq33(k=2) envelope", "Thm3.1", spec,
                      eq33_envelope(2), j_lo, j_hi, 3.0, opt);
  });
}

std::vector<Check> summation_by_parts(const SuiteOptions&) {
  constexpr std::size_t kMaxN = 10'000;
  const FactorSieve sieve(kMaxN);
  auto lambda = std::make_shared<const ArithFnTable>(von_mangoldt_table(sieve));
  auto primes = std::make_shared<const ArithFnTable>(prime_indicator_table(sieve));
  auto p12 = std::make_shared<const CountTable>(p_H_table(PartSet({1, 2}), kMaxN));
  auto p123 = std::make_shared<const CountTable>(p_H_table(PartSet({1, 2, 3}), kMaxN));
  const std::vector<SeriesSpec> families = {
      constant_series(),        identity_series(),
      count_series(p12, 2),     count_series(p123, 3),
      arith_series(lambda),     arith_product_series(lambda, lambda),
      prime_count_series(p12, primes, 2)};

  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, families.size() - 1);
  std::uniform_real_distribution<double> zdist(0.05, 0.999);
  std::uniform_int_distribution<std::size_t> ndist(1, kMaxN);
  double worst = 0.0;
  int failures = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto& spec = families[pick(rng)];
    const double z = zdist(rng);
    const std::size_t n = ndist(rng);
    const auto r = summation_by_parts_check(spec, z, n);
    const double rel = r.lhs == 0.0 ? r.abs_diff : r.abs_diff / std::fabs(r.lhs);
    worst = std::max(worst, rel);
    if (!(rel <= 1e-9)) ++failures;
  }
  return {{"finite_summation_by_parts 100 random (family,z,N)", "Eq2.5", failures == 0,
           fmt::format("worst_rel={} failures={}", g6(worst), failures), "1e-09"}};
}

// --- lambda ---------------------------------------------------------------

std::vector<Check> lambda_k_invariants(const SuiteOptions&) {
  constexpr std::size_t kLimit = 100'000;
  const FactorSieve sieve(kLimit);
  const ArithFnTable lambda = von_mangoldt_table(sieve);
  std::vector<Check> out;
  double worst_lambda1 = 0.0;
  for (unsigned k = 1; k <= 3; ++k) {
    const ArithFnTable lk = lambda_k_table(sieve, k);
    int bound_violations = 0;
    int support_violations = 0;
    double worst_residue = 0.0;
    for (std::size_t n = 1; n <= kLimit; ++n) {
      const double v = lk[n];
      if (v > std::pow(std::log(static_cast<double>(n)), k) + 1e-9) ++bound_violations;
      if (sieve.omega(n) > k) {
        worst_residue = std::max(worst_residue, std::fabs(v));
        if (std::fabs(v) > 1e-9) ++support_violations;
      }
      if (k == 1) worst_lambda1 = std::max(worst_lambda1, std::fabs(v - lambda[n]));
    }
    out.push_back({fmt::format("Lambda_{}(n) <= log(n)^{} n<=1e5", k, k), "Sec3/Lambda_k",
                   bound_violations == 0, fmt::format("violations={}", bound_violations),
                   "0 (slack 1e-09)"});
    out.push_back({fmt::format("Lambda_{}(n) = 0 when omega(n) > {} n<=1e5", k, k),
                   "Sec1/Lambda_k", support_violations == 0,
                   fmt::format("violations={} max|residue|={}", support_violations,
                               g6(worst_residue)),
                   "|v| <= 1e-09"});
  }
  out.push_back({"Lambda_1 = Lambda n<=1e5", "Sec1/Lambda_k", worst_lambda1 <= 1e-10,
                 g6(worst_lambda1), "1e-10"});
  return out;
}

std::vector<Check> prime_tables(const SuiteOptions&) {
  const FactorSieve sieve(1'000'000);
  const PrimeSummaryTable t = prime_summaries(sieve);
  const ArithFnTable mu = mobius_table(sieve);
  constexpr std::size_t kMobiusLimit = 10'000;
  std::vector<int> divisor_sum(kMobiusLimit + 1, 0);
  for (std::size_t d = 1; d <= kMobiusLimit; ++d) {
    for (std::size_t n = d; n <= kMobiusLimit; n += d) divisor_sum[n] += mu.ints()[d];
  }
  int mobius_failures = 0;
  for (std::size_t n = 1; n <= kMobiusLimit; ++n) {
    if (divisor_sum[n] != (n == 1 ? 1 : 0)) ++mobius_failures;
  }
  const double psi_ratio = t.psi[1'000'000] / 1e6;
  return {
      {"pi(10)=4 pi(1000)=168", "Eq2.7", t.pi[10] == 4 && t.pi[1000] == 168,
       fmt::format("{},{}", t.pi[10], t.pi[1000]), "4,168"},
      {"psi(1e6)/1e6", "Sec3/PNT", psi_ratio >= 0.8 && psi_ratio <= 1.2, g6(psi_ratio),
       "[0.8,1.2]"},
      {"sum_{d|n} mu(d) = [n=1] n<=1e4", "Sec1/mu", mobius_failures == 0,
       fmt::format("failures={}", mobius_failures), "0"},
  };
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"C1", "partitions", "partition DP equals brute-force enumeration", 5.0, partition_oracle},
      {"C2", "partitions", "truncated series equals product generating function", 1.0,
       generating_function},
      {"C3", "partitions", "p_H main term convergence", 1.0, main_term_convergence},
      {"S1", "partitions", "p_m(n) <= (n+1)^m", 5.0, max_parts_bound},
      {"C4", "bernoulli", "Faulhaber sums exact", 5.0, faulhaber_exact},
      {"C5", "bernoulli", "partial sums of p_H vs Bernoulli main term", 5.0, thm23_error_band},
      {"S2", "bernoulli", "Bernoulli structural identities", 5.0, bernoulli_structure},
      {"C6", "tauberian", "limit form (1-z)^k sum p_H z^n", 30.0, thm21_limit},
      {"C7", "tauberian", "prime-indexed p_H series boundedness band", 180.0, cor22_band},
      {"C8", "tauberian", "Hardy-Littlewood special case Lambda", 60.0, hardy_littlewood},
      {"C9", "tauberian", "Lambda^2 series boundedness band", 60.0, eq33_k1_band},
      {"S3", "tauberian", "Lambda*Lambda_2 series boundedness band", 60.0, eq33_k2_band},
      {"C11", "tauberian", "finite summation by parts identity", 5.0, summation_by_parts},
      {"C10", "lambda", "Lambda_k invariants", 10.0, lambda_k_invariants},
      {"S4", "lambda", "prime tables and Moebius sum", 10.0, prime_tables},
  };
  return all;
}

const Criterion& criterion(std::string_view id) {
  for (const auto& c : criteria()) {
    if (c.id == id) return c;
  }
  throw DomainError(fmt::format("unknown criterion '{}'", id));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "partitions", "bernoulli", "tauberian",
                                                 "lambda"};
  return names;
}

SuiteResult run_suite(std::string_view suite, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw DomainError(fmt::format("unknown suite '{}'", suite));
  }
  SuiteResult result{std::string(suite), {}};
  for (const auto& c : criteria()) {
    if (suite != "all" && c.suite != suite) continue;
    auto checks = c.run(options);
    for (auto& check : checks) {
      check.name = fmt::format("{} {}", c.id, check.name);
      result.checks.push_back(std::move(check));
    }
  }
  return result;
}

void print_suite(std::ostream& out, const SuiteResult& result) {
  for (const auto& c : result.checks) {
    fmt::print(out, "{} [{}] {}: measured={} threshold={}\n", c.pass ? "PASS" : "FAIL", c.anchor,
               c.name, c.measured, c.threshold);
  }
  const auto passed = std::count_if(result.checks.begin(), result.checks.end(),
                                    [](const Check& c) { return c.pass; });
  fmt::print(out, "suite {}: {}/{} checks passed\n", result.suite, passed, result.checks.size());
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_suite_csv(std::ostream& out, const SuiteResult& result) {
  out << "suite,check,anchor,status,measured,threshold\n";
  for (const auto& c : result.checks) {
    fmt::print(out, "{},{},{},{},{},{}\n", csv_field(result.suite), csv_field(c.name),
               csv_field(c.anchor), c.pass ? "PASS" : "FAIL", csv_field(c.measured),
               csv_field(c.threshold));
  }
}

}  // namespace tauber
