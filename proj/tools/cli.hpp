#pragma once

// Command-line front end: partitions, bernoulli, arith, series, verify.
//
// Exit codes: 0 success / all checks pass, 1 a verification check failed,
// 2 usage error (bad flags, invalid set, mismatched family and envelope),
// 3 capacity error (table, sieve or term caps).

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tauber::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

struct RunConfig {
  std::string command;
  std::string set;                 // "1,2,3"
  std::optional<unsigned> m;       // partitions into at most m parts
  unsigned k = 1;
  std::size_t limit = 100;
  int j_min = 4;
  int j_max = 14;
  bool j_max_given = false;
  double rel_tol = 1e-12;
  std::string out_path;
  std::string format = "csv";
  std::string suite = "all";
  bool asymptotic = false;
  bool poly = false;
  std::string family;
  std::string envelope;
  std::string fn = "vonmangoldt";
  std::size_t sieve_limit = 0;
  std::size_t cap = 50'000'000;
  std::size_t max_terms = 200'000'000;
  unsigned threads = 0;
};

// Reads "key = value" lines ('#' starts a comment) into "--key value" flags.
// Keys already present in `explicit_args` are skipped so flags override the
// file. Throws std::runtime_error on a malformed line or unreadable file.
[[nodiscard]] std::vector<std::string> config_file_args(const std::filesystem::path& path,
                                                        const std::vector<std::string>& explicit_args);

// Parses and dispatches. Data goes to `out` unless --out is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tauber::cli
