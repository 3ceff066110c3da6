#include "tauber/series.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include <fmt/format.h>

#include "tauber/errors.hpp"
#include "tauber/summation.hpp"

namespace tauber {

namespace {

void require_open_unit(double z, std::string_view what) {
  if (!(z > 0.0 && z < 1.0)) {
    throw DomainError(fmt::format("{}: z = {} is outside (0, 1)", what, z));
  }
}

// 1 / (1 - z) and log of it, without cancellation for z near 1.
double inv_gap(double z) { return 1.0 / (1.0 - z); }
double log_inv_gap(double z) { return -std::log1p(-z); }

}  // namespace

double GrowthCertificate::bound(std::size_t n) const {
  return constant * std::pow(static_cast<double>(n) + 1.0, exponent);
}

void verify_certificate(const SeriesSpec& spec, std::size_t dense_limit, std::size_t samples) {
  const std::size_t top = spec.coverage == kUnbounded ? dense_limit : spec.coverage;
  auto check = [&](std::size_t n) {
    const double c = std::fabs(spec.coeff(n));
    if (c > spec.certificate.bound(n)) {
      throw DomainError(fmt::format("series '{}': |c_{}| = {} exceeds certificate {} * (n+1)^{}",
                                    spec.name, n, c, spec.certificate.constant,
                                    spec.certificate.exponent));
    }
  };
  const std::size_t dense_top = std::min(top, dense_limit);
  for (std::size_t n = spec.start_index; n <= dense_top; ++n) check(n);
  if (top > dense_top && samples > 0) {
    const std::size_t stride = std::max<std::size_t>(1, (top - dense_top) / samples);
    for (std::size_t n = dense_top + 1; n <= top; n += stride) check(n);
    check(top);
  }
}

double certified_tail(const GrowthCertificate& cert, double z, std::size_t last_index) {
  // Majorant terms t_n = C (n+1)^r z^n have t_{n+1}/t_n = z ((n+2)/(n+1))^r,
  // decreasing in n, so past last_index the ratio is at most q below.
  const double n1 = static_cast<double>(last_index) + 1.0;
  const double q = z * std::pow((n1 + 1.0) / n1, cert.exponent);
  if (!(q < 1.0)) return std::numeric_limits<double>::infinity();
  const double log_first = std::log(cert.constant) + cert.exponent * std::log(n1 + 1.0) +
                           n1 * std::log(z);
  return std::exp(log_first) / (1.0 - q);
}

EvalResult eval_series(const SeriesSpec& spec, double z, double rel_tol, std::size_t max_terms) {
  require_open_unit(z, "eval_series");
  if (!(rel_tol > 1e-14 && rel_tol < 1e-2)) {
    throw DomainError(fmt::format("eval_series: rel_tol = {} outside (1e-14, 1e-2)", rel_tol));
  }
  const double log_z = std::log(z);
  // Below this index the majorant ratio is not yet < 1.
  const double first_check =
      std::ceil(spec.certificate.exponent / -log_z);

  CompensatedSum sum;
  double zn = std::pow(z, static_cast<double>(spec.start_index));
  for (std::size_t n = spec.start_index;; ++n) {
    if (n - spec.start_index >= max_terms) {
      throw CapacityError(fmt::format(
          "series '{}' at z = {:.17g}: tail not certified within the {}-term cap", spec.name, z,
          max_terms));
    }
    if (n > spec.coverage) {
      throw CapacityError(fmt::format(
          "series '{}' at z = {:.17g}: needs c_{} but coefficients cover only n <= {}", spec.name,
          z, n, spec.coverage));
    }
    if (n % 256 == 0) zn = std::pow(z, static_cast<double>(n));
    sum.add(spec.coeff(n) * zn);
    zn *= z;

    const bool due = n < 4096 || n % 64 == 63;
    if (due && static_cast<double>(n) >= first_check) {
      const double tail = certified_tail(spec.certificate, z, n);
      const double value = sum.value();
      if (tail <= rel_tol * std::fabs(value) || tail == 0.0) return {value, n, tail};
    }
  }
}

double product_oracle(const PartSet& set, double z) {
  require_open_unit(z, "product_oracle");
  const double log_z = std::log(z);
  double out = 1.0;
  for (const auto h : set.parts()) out /= -std::expm1(static_cast<double>(h) * log_z);
  return out;
}

SummationByParts summation_by_parts_check(const SeriesSpec& spec, double z,
                                          std::size_t last_index) {
  require_open_unit(z, "summation_by_parts_check");
  if (last_index > spec.coverage) {
    throw CapacityError(fmt::format("summation_by_parts_check: N = {} beyond coverage {}",
                                    last_index, spec.coverage));
  }
  CompensatedSum lhs;
  CompensatedSum weighted;  // sum_{n<N} A(n) z^n
  CompensatedSum partial;   // A(n)
  double a_last = 0.0;
  for (std::size_t n = 0; n <= last_index; ++n) {
    const double c = n < spec.start_index ? 0.0 : spec.coeff(n);
    const double zn = std::pow(z, static_cast<double>(n));
    lhs.add(c * zn);
    partial.add(c);
    a_last = partial.value();
    if (n < last_index) weighted.add(a_last * zn);
  }
  const double zN = std::pow(z, static_cast<double>(last_index));
  SummationByParts out;
  out.lhs = lhs.value();
  out.rhs = (1.0 - z) * weighted.value() + a_last * zN;
  out.abs_diff = std::fabs(out.lhs - out.rhs);
  return out;
}

double gamma_function(double x) {
  if (!(x > 0.0)) throw DomainError(fmt::format("gamma_function: {} is not positive", x));
  if (x == std::floor(x) && x <= 171.0) {
    double f = 1.0;
    for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
    return f;
  }
  return std::tgamma(x);
}

Envelope lemma11_envelope(double constant, double eps, std::function<double(double)> f,
                          LemmaExponent exponent, std::string f_name) {
  const double power = exponent == LemmaExponent::literal ? eps + 1.0 : eps;
  const double scale = constant * gamma_function(eps + 1.0);
  auto name = fmt::format("lemma11[C={},eps={},f={},{}]", constant, eps, f_name,
                          exponent == LemmaExponent::literal ? "literal" : "classical");
  return {EnvelopeKind::lemma11, std::move(name), [=, f = std::move(f)](double z) {
            const double u = inv_gap(z);
            return scale * std::pow(u, power) * f(u);
          }};
}

Envelope thm21_envelope(const PartSet& set, std::function<double(double)> a_model,
                        std::string a_name) {
  set.require_coprime("thm21_envelope");
  const double power = static_cast<double>(set.k()) - 1.0;
  return {EnvelopeKind::thm21, fmt::format("thm21[H={},A={}]", set.to_string(), a_name),
          [=, a = std::move(a_model)](double z) {
            const double u = inv_gap(z);
            return std::pow(u, power) * a(u);
          }};
}

Envelope cor22_envelope(const PartSet& set) {
  set.require_coprime("cor22_envelope");
  const double power = static_cast<double>(set.k());
  return {EnvelopeKind::cor22, fmt::format("cor22[H={}]", set.to_string()), [=](double z) {
            const double log_u = log_inv_gap(z);
            if (!(log_u > 0.0)) {
              throw DomainError(fmt::format("cor22 envelope: log(1/(1-z)) <= 0 at z = {}", z));
            }
            return std::pow(inv_gap(z), power) / log_u;
          }};
}

Envelope thm31_envelope(double eps, unsigned k) {
  return {EnvelopeKind::thm31, fmt::format("thm31[eps={},k={}]", eps, k), [=](double z) {
            return std::pow(inv_gap(z), eps) * std::pow(log_inv_gap(z), static_cast<double>(k));
          }};
}

Envelope eq33_envelope(unsigned k) {
  return {EnvelopeKind::eq33, fmt::format("eq33[k={}]", k), [=](double z) {
            return inv_gap(z) * std::pow(log_inv_gap(z), static_cast<double>(k));
          }};
}

Envelope power_envelope(double p) {
  return {EnvelopeKind::power, fmt::format("power[{}]", p),
          [=](double z) { return std::pow(inv_gap(z), p); }};
}

double envelope_value(const Envelope& env, double z) {
  require_open_unit(z, "envelope_value");
  const double v = env.raw(z);
  if (!(std::isfinite(v) && v > 0.0)) {
    throw DomainError(fmt::format("envelope {} is not finite positive at z = {}: {}", env.name(),
                                  z, v));
  }
  return v;
}

EvalGrid::EvalGrid(std::vector<GridPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("evaluation grid is empty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    require_open_unit(points_[i].z, "EvalGrid");
    if (i > 0 && !(points_[i].z > points_[i - 1].z)) {
      throw DomainError("evaluation grid must be strictly increasing");
    }
  }
}

EvalGrid EvalGrid::dyadic(int j_min, int j_max) {
  if (j_min < 1 || j_max < j_min || j_max > 52) {
    throw DomainError(fmt::format("dyadic grid: need 1 <= j_min <= j_max <= 52, got [{}, {}]",
                                  j_min, j_max));
  }
  std::vector<GridPoint> points;
  for (int j = j_min; j <= j_max; ++j) points.push_back({j, 1.0 - std::ldexp(1.0, -j)});
  return EvalGrid(std::move(points));
}

std::pair<double, double> RatioReport::band(std::size_t first) const {
  if (first >= rows.size()) throw DomainError("ratio band: empty row range");
  double lo = rows[first].ratio;
  double hi = lo;
  for (std::size_t i = first + 1; i < rows.size(); ++i) {
    lo = std::min(lo, rows[i].ratio);
    hi = std::max(hi, rows[i].ratio);
  }
  return {lo, hi};
}

RatioReport ratio_sweep(const SeriesSpec& spec, const Envelope& env, const EvalGrid& grid,
                        double rel_tol, unsigned threads, std::size_t max_terms) {
  const auto& points = grid.points();
  std::vector<RatioRow> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      try {
        const auto [j, z] = points[i];
        const EvalResult r = eval_series(spec, z, rel_tol, max_terms);
        const double e = envelope_value(env, z);
        rows[i] = {j, z, r.last_index, r.value, e, r.value / e, r.tail_bound};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t n_workers = std::min<std::size_t>(threads, points.size());
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n_workers; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const CapacityError& e) {
      throw CapacityError(fmt::format("grid point j = {}: {}", points[i].j, e.what()));
    }
  }
  return {spec.name, env.name(), std::move(rows)};
}

}  // namespace tauber
