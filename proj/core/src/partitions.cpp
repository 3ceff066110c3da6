#include "tauber/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/ranges.h>

namespace tauber {

PartSet::PartSet(std::vector<std::uint64_t> parts, GcdPolicy policy) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidSetError("part set is empty");
  std::sort(parts_.begin(), parts_.end());
  if (parts_.front() == 0) throw InvalidSetError("parts must be positive");
  if (std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end()) {
    throw InvalidSetError(fmt::format("parts must be distinct: {}", to_string()));
  }
  for (const auto h : parts_) gcd_ = std::gcd(gcd_, h);
  if (policy == GcdPolicy::require_coprime) require_coprime("part set");
}

std::uint64_t PartSet::prod() const {
  std::uint64_t p = 1;
  for (const auto h : parts_) {
    if (__builtin_mul_overflow(p, h, &p)) {
      throw OverflowError(fmt::format("product of {} overflows 64 bits", to_string()));
    }
  }
  return p;
}

void PartSet::require_coprime(std::string_view what) const {
  if (gcd_ != 1) {
    throw InvalidSetError(
        fmt::format("{}: {} has gcd {}, gcd 1 required", what, to_string(), gcd_));
  }
}

std::string PartSet::to_string() const { return fmt::format("{{{}}}", fmt::join(parts_, ",")); }

PartSet parse_part_set(std::string_view text, GcdPolicy policy) {
  std::vector<std::uint64_t> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string_view::npos) {
      throw InvalidSetError(fmt::format("cannot parse part '{}' in '{}'", item, text));
    }
    std::uint64_t v = 0;
    for (const char c : item) {
      if (__builtin_mul_overflow(v, 10u, &v) ||
          __builtin_add_overflow(v, static_cast<std::uint64_t>(c - '0'), &v)) {
        throw InvalidSetError(fmt::format("part '{}' too large", item));
      }
    }
    parts.push_back(v);
    pos = comma + 1;
  }
  return PartSet(std::move(parts), policy);
}

CountTable p_H_table(const PartSet& set, std::size_t limit, std::size_t cap) {
  if (limit > cap) {
    throw CapacityError(fmt::format("partition table limit {} exceeds cap {}", limit, cap));
  }
  CountTable table{"H=" + set.to_string(), std::vector<std::uint64_t>(limit + 1, 0)};
  auto& c = table.counts;
  c[0] = 1;
  for (const std::uint64_t h : set.parts()) {
    for (std::size_t n = h; n <= limit; ++n) {
      if (__builtin_add_overflow(c[n], c[n - h], &c[n])) {
        throw OverflowError(
            fmt::format("p_H({}) for H={} exceeds 64 bits", n, set.to_string()));
      }
    }
  }
  return table;
}

CountTable p_m_table(unsigned m, std::size_t limit, std::size_t cap) {
  if (m == 0) throw DomainError("p_m_table: m must be >= 1");
  std::vector<std::uint64_t> parts(m);
  std::iota(parts.begin(), parts.end(), std::uint64_t{1});
  CountTable table = p_H_table(PartSet(std::move(parts)), limit, cap);
  table.source = fmt::format("m={}", m);
  return table;
}

namespace {

std::uint64_t enumerate(std::span<const std::uint64_t> parts, std::size_t top, std::uint64_t rest) {
  if (rest == 0) return 1;
  std::uint64_t total = 0;
  // Choose the next (largest remaining) part among parts[0..top].
  for (std::size_t i = 0; i <= top; ++i) {
    if (parts[i] <= rest) total += enumerate(parts, i, rest - parts[i]);
  }
  return total;
}

}  // namespace

std::uint64_t brute_force_p_H(const PartSet& set, std::uint64_t n) {
  if (n > kBruteForceGuard) {
    throw RefusalError(
        fmt::format("brute_force_p_H: n = {} exceeds enumeration guard {}", n, kBruteForceGuard));
  }
  const auto parts = set.parts();
  return enumerate(parts, parts.size() - 1, n);
}

double asymptotic_main_term(const PartSet& set, std::uint64_t n) {
  set.require_coprime("asymptotic_main_term");
  if (n == 0) throw DomainError("asymptotic_main_term: n must be >= 1");
  const unsigned k = set.k();
  double factorial = 1.0;
  for (unsigned i = 2; i < k; ++i) factorial *= i;
  return std::pow(static_cast<double>(n), static_cast<double>(k - 1)) /
         (static_cast<double>(set.prod()) * factorial);
}

}  // namespace tauber
