#include "tauber/report.hpp"

#include <cmath>

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace tauber {

std::string format_real(double v) { return fmt::format("{:.15g}", v); }

void write_count_csv(std::ostream& out, const CountTable& table,
                     const std::function<double(std::uint64_t)>* main_term) {
  out << (main_term ? "n,p(n),main_term\n" : "n,p(n)\n");
  for (std::size_t n = 0; n <= table.limit(); ++n) {
    if (main_term) {
      // The main term is defined for n >= 1 only.
      const std::string mt = n == 0 ? "" : format_real((*main_term)(n));
      fmt::print(out, "{},{},{}\n", n, table.counts[n], mt);
    } else {
      fmt::print(out, "{},{}\n", n, table.counts[n]);
    }
  }
}

void write_arith_csv(std::ostream& out, const ArithFnTable& table) {
  out << "n,value\n";
  for (std::size_t n = 1; n <= table.limit(); ++n) {
    if (table.integer_valued()) {
      fmt::print(out, "{},{}\n", n, static_cast<int>(table.ints()[n]));
    } else {
      fmt::print(out, "{},{}\n", n, format_real(table.reals()[n]));
    }
  }
}

void write_summary_csv(std::ostream& out, const PrimeSummaryTable& table, bool psi) {
  out << "n,value\n";
  for (std::size_t x = 1; x <= table.limit(); ++x) {
    if (psi) {
      fmt::print(out, "{},{}\n", x, format_real(table.psi[x]));
    } else {
      fmt::print(out, "{},{}\n", x, table.pi[x]);
    }
  }
}

void write_bernoulli_csv(std::ostream& out, const std::vector<BigRational>& numbers) {
  out << "k,numerator,denominator\n";
  for (std::size_t k = 0; k < numbers.size(); ++k) {
    fmt::print(out, "{},{},{}\n", k, numbers[k].get_num().get_str(),
               numbers[k].get_den().get_str());
  }
}

void write_ratio_csv(std::ostream& out, const RatioReport& report) {
  out << "j,z,N,value,envelope,ratio,tail_bound\n";
  for (const auto& r : report.rows) {
    fmt::print(out, "{},{},{},{},{},{},{}\n", r.j, format_real(r.z), r.last_index,
               format_real(r.value), format_real(r.envelope), format_real(r.ratio),
               format_real(r.tail_bound));
  }
}

void write_ratio_plot(std::ostream& out, const RatioReport& report) {
  fmt::print(out, "# series={} envelope={}\n# log2(1/(1-z)) ratio\n", report.series_name,
             report.envelope_name);
  for (const auto& r : report.rows) {
    fmt::print(out, "{} {}\n", format_real(-std::log2(1.0 - r.z)), format_real(r.ratio));
  }
}

}  // namespace tauber
