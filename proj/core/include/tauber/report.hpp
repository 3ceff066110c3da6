#pragma once

// CSV and plot-data writers. Reals are printed with 15 significant digits.

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "tauber/arith.hpp"
#include "tauber/bernoulli.hpp"
#include "tauber/partitions.hpp"
#include "tauber/series.hpp"

namespace tauber {

[[nodiscard]] std::string format_real(double v);

// n,p(n)  [,main_term]
void write_count_csv(std::ostream& out, const CountTable& table,
                     const std::function<double(std::uint64_t)>* main_term = nullptr);

// n,value for n = 1..limit
void write_arith_csv(std::ostream& out, const ArithFnTable& table);
// n,value for a prime-summary column (pi or psi), x = 1..limit
void write_summary_csv(std::ostream& out, const PrimeSummaryTable& table, bool psi);

// k,numerator,denominator
void write_bernoulli_csv(std::ostream& out, const std::vector<BigRational>& numbers);

// j,z,N,value,envelope,ratio,tail_bound
void write_ratio_csv(std::ostream& out, const RatioReport& report);
// "log2(1/(1-z)) ratio" pairs, one per line, for external plotting.
void write_ratio_plot(std::ostream& out, const RatioReport& report);

}  // namespace tauber
