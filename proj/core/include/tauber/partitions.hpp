#pragma once

// Restricted partition counts p_H(n) and p_m(n), an independent enumeration
// oracle, the polynomial main term of p_H, and prefix-sum tables.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <fmt/format.h>

#include "tauber/errors.hpp"
#include "tauber/summation.hpp"

namespace tauber {

inline constexpr std::size_t kDefaultTableCap = 50'000'000;
inline constexpr std::uint64_t kBruteForceGuard = 60;

enum class GcdPolicy { require_coprime, any };

// Finite set of distinct positive integers. The default policy rejects sets
// whose gcd exceeds 1; counting-only callers may opt out with GcdPolicy::any.
class PartSet {
 public:
  explicit PartSet(std::vector<std::uint64_t> parts,
                   GcdPolicy policy = GcdPolicy::require_coprime);

  [[nodiscard]] std::span<const std::uint64_t> parts() const noexcept { return parts_; }
  [[nodiscard]] unsigned k() const noexcept { return static_cast<unsigned>(parts_.size()); }
  // Exact product of the parts; throws OverflowError if it does not fit.
  [[nodiscard]] std::uint64_t prod() const;
  [[nodiscard]] std::uint64_t gcd() const noexcept { return gcd_; }
  [[nodiscard]] bool coprime() const noexcept { return gcd_ == 1; }
  // Throws InvalidSetError when gcd != 1.
  void require_coprime(std::string_view what) const;

  [[nodiscard]] std::string to_string() const;  // "{1,2,3}"

 private:
  std::vector<std::uint64_t> parts_;
  std::uint64_t gcd_ = 0;
};

// Parses "1,2,3". Whitespace around entries is ignored.
[[nodiscard]] PartSet parse_part_set(std::string_view text, GcdPolicy policy);

struct CountTable {
  std::string source;                  // "H={1,2}" or "m=3"
  std::vector<std::uint64_t> counts;   // counts[n], n = 0..limit

  [[nodiscard]] std::size_t limit() const noexcept { return counts.size() - 1; }
  [[nodiscard]] std::uint64_t operator[](std::size_t n) const { return counts.at(n); }
};

// Part-outer / amount-inner DP, so each multiset is counted once.
[[nodiscard]] CountTable p_H_table(const PartSet& set, std::size_t limit,
                                   std::size_t cap = kDefaultTableCap);
// Partitions into at most m parts, via conjugation: parts drawn from {1..m}.
[[nodiscard]] CountTable p_m_table(unsigned m, std::size_t limit,
                                   std::size_t cap = kDefaultTableCap);

// Recursive enumeration with non-increasing part choice. n <= 60.
[[nodiscard]] std::uint64_t brute_force_p_H(const PartSet& set, std::uint64_t n);

// (1 / prod h) * n^{k-1} / (k-1)!
[[nodiscard]] double asymptotic_main_term(const PartSet& set, std::uint64_t n);

template <class T>
struct PartialSumTable {
  std::string a_name;
  std::string b_name;
  std::vector<T> sums;  // sums[x] = sum_{n <= x} a_n b_n

  [[nodiscard]] std::size_t limit() const noexcept { return sums.size() - 1; }
};

namespace detail {

template <std::integral T>
std::int64_t checked_to_i64(T v) {
  if constexpr (std::is_unsigned_v<T>) {
    if (v > static_cast<std::make_unsigned_t<std::int64_t>>(INT64_MAX)) {
      throw OverflowError(fmt::format("value {} does not fit in int64", v));
    }
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Prefix sums of a_n * b_n over n = 0..limit. Exact (int64, overflow-checked)
// when both inputs are integral, compensated double otherwise.
template <class A, class B>
[[nodiscard]] auto partial_sums(std::span<const A> a, std::span<const B> b, std::size_t limit,
                                std::string a_name = "a", std::string b_name = "b") {
  if (a.size() != b.size()) {
    throw ShapeError(fmt::format("partial_sums: lengths differ ({} vs {})", a.size(), b.size()));
  }
  if (a.size() < limit + 1) {
    throw ShapeError(fmt::format("partial_sums: inputs cover 0..{}, need 0..{}",
                                 a.size() == 0 ? 0 : a.size() - 1, limit));
  }
  if constexpr (std::integral<A> && std::integral<B>) {
    PartialSumTable<std::int64_t> out{std::move(a_name), std::move(b_name), {}};
    out.sums.resize(limit + 1);
    std::int64_t acc = 0;
    for (std::size_t n = 0; n <= limit; ++n) {
      std::int64_t term = 0;
      if (__builtin_mul_overflow(detail::checked_to_i64(a[n]), detail::checked_to_i64(b[n]),
                                 &term) ||
          __builtin_add_overflow(acc, term, &acc)) {
        throw OverflowError(fmt::format("partial_sums overflow at n = {}", n));
      }
      out.sums[n] = acc;
    }
    return out;
  } else {
    PartialSumTable<double> out{std::move(a_name), std::move(b_name), {}};
    out.sums.resize(limit + 1);
    CompensatedSum acc;
    for (std::size_t n = 0; n <= limit; ++n) {
      acc.add(static_cast<double>(a[n]) * static_cast<double>(b[n]));
      out.sums[n] = acc.value();
    }
    return out;
  }
}

}  // namespace tauber
