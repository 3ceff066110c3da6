#pragma once

// Truncated evaluation of sum c_n z^n with a certified tail bound, closed-form
// oracles, predicted growth envelopes, and ratio sweeps along z -> 1-.

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tauber/partitions.hpp"

namespace tauber {

inline constexpr std::size_t kDefaultMaxTerms = 200'000'000;
inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// |c_n| <= constant * (n + 1)^exponent for every n >= 0.
struct GrowthCertificate {
  double constant = 1.0;
  double exponent = 0.0;

  [[nodiscard]] double bound(std::size_t n) const;
};

struct SeriesSpec {
  std::string name;
  std::function<double(std::size_t)> coeff;
  GrowthCertificate certificate;
  std::size_t start_index = 0;
  // Largest n the coefficient source can produce.
  std::size_t coverage = kUnbounded;
};

// Checks |c_n| <= bound(n) densely on n <= dense_limit and on a stride
// sample beyond it, up to the coverage. Throws DomainError on violation.
void verify_certificate(const SeriesSpec& spec, std::size_t dense_limit = 1'000'000,
                        std::size_t samples = 100'000);

struct EvalResult {
  double value = 0.0;
  std::size_t last_index = 0;  // the sum runs over n <= last_index
  double tail_bound = 0.0;
};

// Sums terms in increasing n until the geometric majorant of the remaining
// certificate terms falls below rel_tol * |partial sum|. Requires z in (0, 1)
// and rel_tol in (1e-14, 1e-2). Throws CapacityError if more than max_terms
// terms, or terms beyond the spec's coverage, would be needed.
[[nodiscard]] EvalResult eval_series(const SeriesSpec& spec, double z, double rel_tol,
                                     std::size_t max_terms = kDefaultMaxTerms);

// Certified tail bound after truncating at last_index, or +inf when the
// geometric majorant does not yet apply.
[[nodiscard]] double certified_tail(const GrowthCertificate& cert, double z,
                                    std::size_t last_index);

// prod_{h in H} 1 / (1 - z^h)
[[nodiscard]] double product_oracle(const PartSet& set, double z);

struct SummationByParts {
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
};

// lhs = sum_{n<=N} c_n z^n; rhs = (1-z) sum_{n<N} A(n) z^n + A(N) z^N with
// A(n) = sum_{j<=n} c_j.
[[nodiscard]] SummationByParts summation_by_parts_check(const SeriesSpec& spec, double z,
                                                        std::size_t last_index);

// Gamma on positive reals; exact factorial for integer arguments up to 171.
[[nodiscard]] double gamma_function(double x);

enum class EnvelopeKind { lemma11, thm21, cor22, thm31, eq33, power };
// literal: (1-z)^{-(eps+1)}; classical (Abelian) form: (1-z)^{-eps}.
enum class LemmaExponent { literal, classical };

class Envelope {
 public:
  Envelope(EnvelopeKind kind, std::string name, std::function<double(double)> evaluator)
      : kind_(kind), name_(std::move(name)), evaluator_(std::move(evaluator)) {}

  [[nodiscard]] EnvelopeKind kind() const noexcept { return kind_; }
  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] double raw(double z) const { return evaluator_(z); }

 private:
  EnvelopeKind kind_;
  std::string name_;
  std::function<double(double)> evaluator_;
};

// C * Gamma(eps + 1) * (1-z)^{-e} * f(1/(1-z)) with e = eps or eps + 1.
[[nodiscard]] Envelope lemma11_envelope(double constant, double eps,
                                        std::function<double(double)> f,
                                        LemmaExponent exponent = LemmaExponent::classical,
                                        std::string f_name = "1");
// (1-z)^{-(k-1)} * A(1/(1-z)) for a caller-supplied growth model A.
[[nodiscard]] Envelope thm21_envelope(const PartSet& set, std::function<double(double)> a_model,
                                      std::string a_name);
// (1-z)^{-k} / log(1/(1-z))
[[nodiscard]] Envelope cor22_envelope(const PartSet& set);
// (1-z)^{-eps} * log(1/(1-z))^k
[[nodiscard]] Envelope thm31_envelope(double eps, unsigned k);
// (1-z)^{-1} * log(1/(1-z))^k
[[nodiscard]] Envelope eq33_envelope(unsigned k);
// (1-z)^{-p}
[[nodiscard]] Envelope power_envelope(double p);

// Evaluates env at z in (0, 1); DomainError if z is outside, or the result is
// not a finite positive number.
[[nodiscard]] double envelope_value(const Envelope& env, double z);

struct GridPoint {
  int j = 0;
  double z = 0.0;
};

class EvalGrid {
 public:
  explicit EvalGrid(std::vector<GridPoint> points);
  // z_j = 1 - 2^{-j}, j = j_min..j_max.
  [[nodiscard]] static EvalGrid dyadic(int j_min, int j_max);

  [[nodiscard]] const std::vector<GridPoint>& points() const noexcept { return points_; }
  [[nodiscard]] std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<GridPoint> points_;
};

struct RatioRow {
  int j = 0;
  double z = 0.0;
  std::size_t last_index = 0;
  double value = 0.0;
  double envelope = 0.0;
  double ratio = 0.0;
  double tail_bound = 0.0;
};

struct RatioReport {
  std::string series_name;
  std::string envelope_name;
  std::vector<RatioRow> rows;

  // min and max ratio over rows[first..].
  [[nodiscard]] std::pair<double, double> band(std::size_t first = 0) const;
  // band over the last half of the grid.
  [[nodiscard]] std::pair<double, double> plateau() const { return band(rows.size() / 2); }
};

// One row per grid point, in grid order. Grid points are evaluated
// concurrently on up to `threads` workers (0: hardware concurrency); each
// point is summed serially, so the report does not depend on scheduling.
[[nodiscard]] RatioReport ratio_sweep(const SeriesSpec& spec, const Envelope& env,
                                      const EvalGrid& grid, double rel_tol, unsigned threads = 0,
                                      std::size_t max_terms = kDefaultMaxTerms);

}  // namespace tauber
