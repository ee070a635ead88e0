#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "apery/apery_seq.hpp"
#include "apery/cache.hpp"
#include "apery/engine.hpp"
#include "apery/harmonic.hpp"
#include "apery/identities.hpp"
#include "apery/modular.hpp"
#include "apery/report.hpp"

namespace {

using namespace apery;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "LO..HI" (inclusive) or a comma list of primes
std::vector<std::uint64_t> parse_primes(const std::string& spec) {
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    std::uint64_t lo = 0, hi = 0;
    try {
      lo = std::stoull(spec.substr(0, dots));
      hi = std::stoull(spec.substr(dots + 2));
    } catch (const std::exception&) {
      throw UsageError("bad prime range '" + spec + "'");
    }
    if (lo > hi) throw UsageError("empty prime range '" + spec + "'");
    auto primes = primes_in(lo, hi);
    if (primes.empty()) throw UsageError("no primes in range '" + spec + "'");
    return primes;
  }
  std::vector<std::uint64_t> primes;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint64_t p = 0;
    try {
      p = std::stoull(item);
    } catch (const std::exception&) {
      throw UsageError("bad prime '" + item + "'");
    }
    if (!is_prime(p)) throw UsageError("'" + item + "' is not prime");
    primes.push_back(p);
  }
  if (primes.empty()) throw UsageError("no primes given");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

struct VerifyOptions {
  std::string suite = "all";
  std::string primes_spec;
  int parallelism = 1;
  std::string format = "table";
  std::string output_path;
  std::string cache_path = default_cache_path();
  bool negative_controls = false;
  bool no_timing = false;
  std::uint64_t nmax = 300;
  long long x_min = -20, x_max = 20;
  unsigned kummer_k_max = 1;
};

int run_verify(const VerifyOptions& opt) {
  SweepConfig cfg;
  cfg.primes = parse_primes(opt.primes_spec);
  cfg.parallelism = opt.parallelism;
  cfg.divisibility_n_max = opt.nmax;
  cfg.x_min = opt.x_min;
  cfg.x_max = opt.x_max;
  cfg.kummer_k_max = opt.kummer_k_max;
  cfg.include_negative_controls = opt.negative_controls;
  if (cfg.x_min > cfg.x_max) throw UsageError("empty x range");

  const std::vector<std::string> ids = suite_checks(opt.suite);
  const BernoulliTable table =
      load_or_build_cache(opt.cache_path, required_bernoulli_depth(ids, cfg));
  const AperySums sums = AperySums::build(required_apery_depth(ids, cfg));

  const auto results = run_checks(ids, cfg, table, sums);

  std::ofstream file;
  if (!opt.output_path.empty()) {
    file.open(opt.output_path, std::ios::trunc);
    if (!file) throw UsageError("cannot write output file '" + opt.output_path + "'");
  }
  std::ostream& out = opt.output_path.empty() ? std::cout : file;
  write_results(out, results, opt.format, !opt.no_timing);
  out.flush();
  if (!out) throw UsageError("write to '" + opt.output_path + "' failed");

  RunConfig rc;
  rc.suite_id = opt.suite;
  rc.primes_spec = opt.primes_spec;
  rc.parallelism = opt.parallelism;
  rc.output_format = opt.format;
  rc.output_path = opt.output_path;
  rc.cache_path = opt.cache_path;
  rc.include_negative_controls = opt.negative_controls;
  const Report report = summarize(rc, results);
  write_report(std::cerr, report);
  return report.all_pass ? 0 : 1;
}

struct IdentityOptions {
  std::size_t trials = 500;
  std::uint64_t seed = 20240501;
  std::string family = "all";
  bool include_mutations = false;
};

int run_identities(const IdentityOptions& opt) {
  const BernoulliTable table(64);
  std::mt19937_64 rng(opt.seed);
  bool ok = true;

  struct Family {
    std::string name;
    std::function<IdentityReport(std::mt19937_64&)> random_instance;
    std::function<IdentityReport(std::uint64_t)> mutated_small;  // instance by index
  };
  const std::vector<Family> families = {
      {"apery-forms",
       [](std::mt19937_64& g) {
         return check_apery_forms(std::uniform_int_distribution<std::uint64_t>(0, 300)(g));
       },
       [](std::uint64_t i) { return mutated::check_apery_forms(i % 10 + 1); }},
      {"odd-binomial-sum",
       [](std::mt19937_64& g) {
         const auto n = std::uniform_int_distribution<std::uint64_t>(1, 200)(g);
         const auto k = std::uniform_int_distribution<std::uint64_t>(0, n + 5)(g);
         return check_odd_binomial_sum(n, k);
       },
       [](std::uint64_t i) { return mutated::check_odd_binomial_sum(i % 10 + 1, i % 3); }},
      {"cubic-binomial-sum",
       [](std::mt19937_64& g) {
         const auto n = std::uniform_int_distribution<std::uint64_t>(1, 200)(g);
         const auto k = std::uniform_int_distribution<std::uint64_t>(0, n + 5)(g);
         return check_cubic_binomial_sum(n, k);
       },
       [](std::uint64_t i) { return mutated::check_cubic_binomial_sum(i % 10 + 1, i % 3); }},
      {"bernoulli-half",
       [&table](std::mt19937_64& g) {
         return check_bernoulli_half(std::uniform_int_distribution<unsigned>(0, 40)(g), table);
       },
       [&table](std::uint64_t i) {
         return mutated::check_bernoulli_half(static_cast<unsigned>(i % 10 + 1), table);
       }},
      {"alternating-binomial-sum",
       [](std::mt19937_64& g) {
         const auto q = std::uniform_int_distribution<std::uint64_t>(1, 100)(g);
         return check_alternating_binomial_sum(2 * q + 1);
       },
       [](std::uint64_t i) { return mutated::check_alternating_binomial_sum(2 * (i % 4) + 3); }},
      {"power-sum",
       [&table](std::mt19937_64& g) {
         const auto n = std::uniform_int_distribution<std::uint64_t>(2, 50)(g);
         const auto m = std::uniform_int_distribution<unsigned>(1, 12)(g);
         return check_power_sum(n, m, table);
       },
       [&table](std::uint64_t i) {
         return mutated::check_power_sum(i % 8 + 2, static_cast<unsigned>(i % 5 + 1), table);
       }},
  };

  for (const auto& fam : families) {
    if (opt.family != "all" && opt.family != fam.name) continue;
    std::size_t failed = 0;
    std::string first_failure;
    for (std::size_t t = 0; t < opt.trials; ++t) {
      const IdentityReport r = fam.random_instance(rng);
      if (!r.pass) {
        ++failed;
        if (first_failure.empty()) {
          first_failure = r.instance + ": " + r.lhs.str() + " != " + r.rhs.str();
        }
      }
    }
    std::cout << fam.name << ": " << (opt.trials - failed) << "/" << opt.trials << " pass\n";
    if (failed > 0) {
      std::cout << "  first failure at " << first_failure << "\n";
      ok = false;
    }
    if (opt.include_mutations) {
      bool mutation_caught = false;
      std::string where;
      for (std::uint64_t i = 0; i < 32 && !mutation_caught; ++i) {
        const IdentityReport r = fam.mutated_small(i);
        if (!r.pass) {
          mutation_caught = true;
          where = r.instance;
        }
      }
      if (mutation_caught) {
        std::cout << "  mutated variant fails as expected (" << where << ")\n";
      } else {
        std::cout << "  VACUOUS: mutated variant never failed\n";
        ok = false;
      }
    }
  }
  return ok ? 0 : 1;
}

int run_seq(const std::string& kind, const std::vector<std::string>& args) {
  const auto arg_u64 = [&args](std::size_t i) { return std::stoull(args.at(i)); };
  if (kind == "apery") {
    const std::uint64_t lo = arg_u64(0);
    const std::uint64_t hi = args.size() > 1 ? arg_u64(1) : lo;
    for (std::uint64_t n = lo; n <= hi; ++n) {
      std::cout << "A_" << n << " = " << apery_number(n).get_str() << "\n";
    }
  } else if (kind == "apery-poly") {
    const std::uint64_t n = arg_u64(0);
    const Integer x(args.at(1));
    std::cout << "A_" << n << "(" << x << ") = " << apery_poly(n, x).get_str() << "\n";
  } else if (kind == "bernoulli") {
    const std::uint64_t lo = arg_u64(0);
    const std::uint64_t hi = args.size() > 1 ? arg_u64(1) : lo;
    const BernoulliTable table(hi);
    for (std::uint64_t n = lo; n <= hi; ++n) {
      std::cout << "B_" << n << " = " << table.at(n) << "\n";
    }
  } else if (kind == "harmonic") {
    const std::uint64_t n = arg_u64(0);
    const unsigned m = args.size() > 1 ? static_cast<unsigned>(arg_u64(1)) : 1;
    std::cout << "H_" << n << "^(" << m << ") = " << harmonic(n, m) << "\n";
  } else if (kind == "mhs") {
    const MhsIndex s = MhsIndex::parse(args.at(0));
    const std::uint64_t n = arg_u64(1);
    std::cout << "H(" << s.str() << ";" << n << ") = " << mhs(s, n) << "\n";
  } else {
    throw UsageError("unknown sequence kind '" + kind + "'");
  }
  return 0;
}

int run_cache_build(const std::string& path, std::uint64_t max_index) {
  if (path.empty()) throw UsageError("no cache path (use --path or set APERY_CACHE)");
  const BernoulliTable table = load_or_build_cache(path, max_index);
  std::cout << "cache at " << path << " covers B_0..B_" << table.max_index() << "\n";
  return 0;
}

int run_cache_inspect(const std::string& path) {
  if (path.empty()) throw UsageError("no cache path (use --path or set APERY_CACHE)");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  in.close();
  const BernoulliTable table = load_or_build_cache(path, 0);
  table.validate();
  std::cout << "valid cache, max index " << table.max_index() << "\n";
  std::cout << "B_0 = " << table.at(0) << ", B_" << table.max_index() << " = "
            << table.at(table.max_index()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of Apery-number congruences and related identities"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "run congruence suites over a prime range");
  verify->add_option("--suite", vopt.suite,
                     "all | theorem1 | theorem2 | lemmas | imports | identities-as-congruences")
      ->capture_default_str();
  verify->add_option("--primes", vopt.primes_spec, "inclusive range LO..HI or comma list")
      ->required();
  verify->add_option("-j,--parallelism", vopt.parallelism, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--format", vopt.format, "json-lines | table")
      ->check(CLI::IsMember({"json-lines", "table"}))
      ->capture_default_str();
  verify->add_option("-o,--output", vopt.output_path, "write results here instead of stdout");
  verify->add_option("--cache", vopt.cache_path, "Bernoulli cache file (default $APERY_CACHE)");
  verify->add_flag("--negative-controls", vopt.negative_controls,
                   "also run the mutated control C06' (must fail)");
  verify->add_flag("--no-timing", vopt.no_timing, "omit elapsed_ms from the output");
  verify->add_option("--nmax", vopt.nmax, "upper n for the divisibility check C07")
      ->capture_default_str();
  verify->add_option("--x-min", vopt.x_min, "C01 grid lower x")->capture_default_str();
  verify->add_option("--x-max", vopt.x_max, "C01 grid upper x")->capture_default_str();
  verify->add_option("--kummer-kmax", vopt.kummer_k_max, "largest index shift in the C03 grid")
      ->capture_default_str();

  IdentityOptions iopt;
  auto* identities = app.add_subcommand("identities", "randomized exact identity sweeps");
  identities->add_option("--trials", iopt.trials, "instances per family")->capture_default_str();
  identities->add_option("--seed", iopt.seed, "RNG seed")->capture_default_str();
  identities->add_option("--family", iopt.family,
                         "all | apery-forms | odd-binomial-sum | cubic-binomial-sum | "
                         "bernoulli-half | alternating-binomial-sum | power-sum")
      ->capture_default_str();
  identities->add_flag("--include-mutations", iopt.include_mutations,
                       "also run the perturbed variants (each must fail)");

  std::string seq_kind;
  std::vector<std::string> seq_args;
  auto* seq = app.add_subcommand("seq", "print sequence values");
  seq->add_option("kind", seq_kind, "apery | apery-poly | bernoulli | harmonic | mhs")
      ->required();
  seq->add_option("args", seq_args, "kind-specific arguments");

  auto* cache = app.add_subcommand("cache", "build or inspect the Bernoulli cache");
  std::string cache_path = default_cache_path();
  std::uint64_t cache_max = 400;
  bool do_build = false, do_inspect = false;
  cache->add_option("--path", cache_path, "cache file (default $APERY_CACHE)");
  cache->add_option("--max", cache_max, "largest index to cover")->capture_default_str();
  cache->add_flag("--build", do_build, "build or extend the cache");
  cache->add_flag("--inspect", do_inspect, "validate and describe the cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return run_verify(vopt);
    if (identities->parsed()) return run_identities(iopt);
    if (seq->parsed()) return run_seq(seq_kind, seq_args);
    if (cache->parsed()) {
      if (do_inspect && !do_build) return run_cache_inspect(cache_path);
      return run_cache_build(cache_path, cache_max);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
