#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "tauber/arith.hpp"
#include "tauber/bernoulli.hpp"
#include "tauber/errors.hpp"
#include "tauber/families.hpp"
#include "tauber/partitions.hpp"
#include "tauber/report.hpp"
#include "tauber/series.hpp"
#include "tauber/suites.hpp"

namespace tauber::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to --out if given, else to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw UsageError(fmt::format("cannot open '{}' for writing", path));
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

int run_partitions(const RunConfig& cfg, std::ostream& out) {
  CountTable table;
  std::optional<PartSet> set;
  if (cfg.m) {
    if (!cfg.set.empty()) throw UsageError("give either --set or --m, not both");
    table = p_m_table(*cfg.m, cfg.limit, cfg.cap);
    std::vector<std::uint64_t> parts(*cfg.m);
    for (unsigned i = 0; i < *cfg.m; ++i) parts[i] = i + 1;
    set.emplace(std::move(parts));
  } else {
    if (cfg.set.empty()) throw UsageError("partitions needs --set or --m");
    set.emplace(parse_part_set(cfg.set, GcdPolicy::any));
    table = p_H_table(*set, cfg.limit, cfg.cap);
  }
  Sink sink(cfg.out_path, out);
  if (cfg.asymptotic) {
    set->require_coprime("--asymptotic");
    const std::function<double(std::uint64_t)> main_term = [&](std::uint64_t n) {
      return asymptotic_main_term(*set, n);
    };
    write_count_csv(*sink, table, &main_term);
  } else {
    write_count_csv(*sink, table);
  }
  return kExitOk;
}

int run_bernoulli(const RunConfig& cfg, std::ostream& out) {
  Sink sink(cfg.out_path, out);
  if (cfg.poly) {
    const RationalPoly p = bernoulli_poly(cfg.k);
    *sink << "degree,coefficient\n";
    for (std::size_t i = 0; i <= cfg.k; ++i) {
      fmt::print(*sink, "{},{}\n", i, p.coeff(i).get_str());
    }
  } else {
    write_bernoulli_csv(*sink, bernoulli_numbers(cfg.k));
  }
  return kExitOk;
}

int run_arith(const RunConfig& cfg, std::ostream& out) {
  static const std::vector<std::string> fns = {"mobius", "vonmangoldt", "lambda_k",
                                               "prime",  "pi",          "psi"};
  if (std::find(fns.begin(), fns.end(), cfg.fn) == fns.end()) {
    throw UsageError(fmt::format("unknown --fn '{}'", cfg.fn));
  }
  const FactorSieve sieve(cfg.limit, cfg.cap);
  Sink sink(cfg.out_path, out);
  if (cfg.fn == "pi" || cfg.fn == "psi") {
    write_summary_csv(*sink, prime_summaries(sieve), cfg.fn == "psi");
  } else if (cfg.fn == "mobius") {
    write_arith_csv(*sink, mobius_table(sieve));
  } else if (cfg.fn == "vonmangoldt") {
    write_arith_csv(*sink, von_mangoldt_table(sieve));
  } else if (cfg.fn == "lambda_k") {
    write_arith_csv(*sink, lambda_k_table(sieve, cfg.k));
  } else {
    write_arith_csv(*sink, prime_indicator_table(sieve));
  }
  return kExitOk;
}

// Envelopes each family may be compared against.
Envelope envelope_for(const RunConfig& cfg, const std::optional<PartSet>& set) {
  const auto& f = cfg.family;
  const auto& e = cfg.envelope;
  auto mismatch = [&] {
    return UsageError(
        fmt::format("envelope '{}' does not apply to family '{}'", e.empty() ? "(none)" : e, f));
  };
  if (f == "pH") {
    const double k = set->k();
    const double prod = static_cast<double>(set->prod());
    if (e == "plain") return power_envelope(k);
    if (e == "thm21") return thm21_envelope(*set, [](double x) { return x + 1.0; }, "x+1");
    if (e == "lemma11" || e == "lemma11_literal") {
      // Partial sums of p_H grow like n^k / (prod(H) k!).
      const double c = 1.0 / (prod * gamma_function(k + 1.0));
      return lemma11_envelope(c, k, [](double) { return 1.0; },
                              e == "lemma11" ? LemmaExponent::classical : LemmaExponent::literal);
    }
    throw mismatch();
  }
  if (f == "pH_primes") {
    if (e == "cor22") return cor22_envelope(*set);
    throw mismatch();
  }
  if (f == "lambda") {
    if (e == "hl") return power_envelope(1.0);
    if (e == "lemma11") return lemma11_envelope(1.0, 1.0, [](double) { return 1.0; });
    throw mismatch();
  }
  if (f == "lambda_sq") {
    if (e == "eq33") return eq33_envelope(1);
    throw mismatch();
  }
  if (f == "lambda_k_weighted") {
    if (e == "eq33") return eq33_envelope(cfg.k);
    if (e == "thm31") return thm31_envelope(1.0, cfg.k);
    throw mismatch();
  }
  throw UsageError(fmt::format("unknown --family '{}' (expected one of: {})", f,
                               fmt::join(family_names(), ", ")));
}

int run_series(const RunConfig& cfg, std::ostream& out) {
  std::optional<PartSet> set;
  const bool needs_set = cfg.family == "pH" || cfg.family == "pH_primes";
  if (needs_set) {
    if (cfg.set.empty()) throw UsageError(fmt::format("family '{}' needs --set", cfg.family));
    set.emplace(parse_part_set(cfg.set, GcdPolicy::require_coprime));
  }
  const Envelope env = envelope_for(cfg, set);
  const EvalGrid grid = EvalGrid::dyadic(cfg.j_min, cfg.j_max);

  FamilyRequest req{cfg.family, set};
  req.k = cfg.k;
  req.sieve_limit = cfg.sieve_limit;
  req.sieve_cap = cfg.cap;
  req.coverage = suggested_coverage(family_certificate(req), grid.points().back().z, cfg.rel_tol);
  if (req.coverage > cfg.max_terms) {
    throw CapacityError(fmt::format("z = {:.17g} needs about {} terms, cap is {}",
                                    grid.points().back().z, req.coverage, cfg.max_terms));
  }
  const SeriesSpec spec = make_family(req);
  verify_certificate(spec);
  const RatioReport report = ratio_sweep(spec, env, grid, cfg.rel_tol, cfg.threads, cfg.max_terms);

  {
    Sink sink(cfg.out_path, out);
    write_ratio_csv(*sink, report);
  }
  if (!cfg.out_path.empty()) {
    const auto plot_path = std::filesystem::path(cfg.out_path).replace_extension(".plot");
    std::ofstream plot(plot_path, std::ios::binary);
    if (!plot) throw UsageError(fmt::format("cannot open '{}' for writing", plot_path.string()));
    write_ratio_plot(plot, report);
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SuiteOptions opt;
  if (cfg.j_max_given) opt.j_max = cfg.j_max;
  opt.rel_tol = cfg.rel_tol;
  opt.threads = cfg.threads;
  opt.sieve_cap = cfg.cap;
  if (cfg.sieve_limit > 0) opt.sieve_limit = cfg.sieve_limit;
  if (std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end()) {
    throw UsageError(fmt::format("unknown --suite '{}' (expected one of: {})", cfg.suite,
                                 fmt::join(suite_names(), ", ")));
  }

  const auto start = std::chrono::steady_clock::now();
  const SuiteResult result = run_suite(cfg.suite, opt);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  print_suite(out, result);
  if (!cfg.out_path.empty()) {
    Sink sink(cfg.out_path, out);
    write_suite_csv(*sink, result);
  }
  fmt::print(err, "elapsed {:.2f} s\n", elapsed.count());
  return result.overall() ? kExitOk : kExitCheckFailed;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool has_flag(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

}  // namespace

std::vector<std::string> config_file_args(const std::filesystem::path& path,
                                          const std::vector<std::string>& explicit_args) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("cannot read config file '{}'", path.string()));
  std::vector<std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error(
          fmt::format("{}:{}: expected key=value, got '{}'", path.string(), lineno, line));
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const std::string flag = "--" + key;
    if (key.empty() || has_flag(explicit_args, flag)) continue;
    if (value == "true") {
      out.push_back(flag);
    } else if (value != "false") {
      out.push_back(flag);
      out.push_back(value);
    }
  }
  return out;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;

  // --config PATH is handled here so file keys can be appended as flags.
  std::vector<std::string> args;
  std::string config_path;
  for (std::size_t i = 0; i < raw_args.size(); ++i) {
    if (raw_args[i] == "--config" && i + 1 < raw_args.size()) {
      config_path = raw_args[++i];
    } else if (raw_args[i].rfind("--config=", 0) == 0) {
      config_path = raw_args[i].substr(9);
    } else {
      args.push_back(raw_args[i]);
    }
  }
  if (!config_path.empty()) {
    try {
      const auto extra = config_file_args(config_path, args);
      args.insert(args.end(), extra.begin(), extra.end());
    } catch (const std::runtime_error& e) {
      fmt::print(err, "error: {}\n", e.what());
      return kExitUsage;
    }
  }

  CLI::App app{"Restricted partitions, arithmetic functions and power-series asymptotics"};
  app.name("tauber");
  app.require_subcommand(1);

  auto* partitions = app.add_subcommand("partitions", "dump p_H(n) or p_m(n) as CSV n,p(n)");
  partitions->add_option("--set", cfg.set, "parts, comma separated (e.g. 1,2,3)");
  partitions->add_option("--m", cfg.m, "count partitions into at most m parts instead");
  partitions->add_option("--limit", cfg.limit, "largest n")->capture_default_str();
  partitions->add_flag("--asymptotic", cfg.asymptotic,
                       "append the polynomial main term (requires gcd 1)");

  auto* bernoulli = app.add_subcommand("bernoulli", "Bernoulli numbers as k,numerator,denominator");
  bernoulli->add_option("--k", cfg.k, "largest index")->capture_default_str();
  bernoulli->add_flag("--poly", cfg.poly, "print the coefficients of B_k(x) instead");

  auto* arith = app.add_subcommand("arith", "arithmetic-function table as n,value");
  arith->add_option("--fn", cfg.fn, "mobius|vonmangoldt|lambda_k|prime|pi|psi")
      ->capture_default_str();
  arith->add_option("--limit", cfg.limit, "largest n")->capture_default_str();
  arith->add_option("--k", cfg.k, "order of lambda_k")->capture_default_str();

  auto* series = app.add_subcommand("series", "series-to-envelope ratio sweep along z -> 1-");
  series->add_option("--family", cfg.family, "pH|pH_primes|lambda|lambda_sq|lambda_k_weighted")
      ->required();
  series->add_option("--envelope", cfg.envelope,
                     "plain|thm21|lemma11|lemma11_literal|cor22|hl|eq33|thm31")
      ->required();
  series->add_option("--set", cfg.set, "parts for pH families");
  series->add_option("--k", cfg.k, "log power for lambda_k_weighted")->capture_default_str();
  series->add_option("--jmin", cfg.j_min, "first dyadic index")->capture_default_str();
  series->add_option("--jmax", cfg.j_max, "last dyadic index")->capture_default_str();
  series->add_option("--rel-tol", cfg.rel_tol, "certified relative tail tolerance")
      ->capture_default_str();
  series->add_option("--sieve-limit", cfg.sieve_limit, "sieve at least this far");
  series->add_option("--max-terms", cfg.max_terms, "term cap per evaluation")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", cfg.suite, "all|partitions|bernoulli|tauberian|lambda")
      ->capture_default_str();
  verify->add_option("--jmax", cfg.j_max, "cap the deepest dyadic index");
  verify->add_option("--rel-tol", cfg.rel_tol, "certified relative tail tolerance")
      ->capture_default_str();
  verify->add_option("--sieve-limit", cfg.sieve_limit, "prime sieve extent for the band check");

  for (auto* sub : {partitions, bernoulli, arith, series, verify}) {
    sub->add_option("--out", cfg.out_path, "output file (default stdout)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv"}));
  }
  for (auto* sub : {partitions, arith, series, verify}) {
    sub->add_option("--cap", cfg.cap, "table / sieve size cap")->capture_default_str();
  }
  for (auto* sub : {series, verify}) {
    sub->add_option("--threads", cfg.threads, "workers across grid points (0: all cores)");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  cfg.j_max_given = verify->count("--jmax") > 0;

  try {
    if (cfg.command == "partitions") return run_partitions(cfg, out);
    if (cfg.command == "bernoulli") return run_bernoulli(cfg, out);
    if (cfg.command == "arith") return run_arith(cfg, out);
    if (cfg.command == "series") return run_series(cfg, out);
    return run_verify(cfg, out, err);
  } catch (const CapacityError& e) {
    fmt::print(err, "capacity error: {}\n", e.what());
    return kExitCapacity;
  } catch (const OverflowError& e) {
    fmt::print(err, "capacity error: {}\n", e.what());
    return kExitCapacity;
  } catch (const RefusalError& e) {
    fmt::print(err, "capacity error: {}\n", e.what());
    return kExitCapacity;
  } catch (const Error& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const UsageError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
}

}  // namespace tauber::cli
