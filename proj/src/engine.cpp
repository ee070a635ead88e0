#include "apery/engine.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "apery/modular.hpp"

namespace apery {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool contains(const std::vector<std::string>& ids, const std::string& id) {
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

CheckResult skipped_row(const CongruenceCheck& check, std::uint64_t p) {
  CheckResult r;
  r.id = check.id;
  r.p = p;
  r.required_k = check.modulus(p).k;
  r.evaluated = false;
  r.negative_control = check.negative_control;
  return r;
}

// one evaluated congruence row from an exact difference
CheckResult valuation_row(std::string id, std::uint64_t p, const Modulus& m,
                          const Rational& diff) {
  CheckResult r;
  r.id = std::move(id);
  r.p = p;
  r.required_k = m.k;
  r.evaluated = true;
  r.achieved = diff.is_zero() ? Valuation::infinity() : padic_valuation(diff, p);
  if (!m.k.has_value()) {
    r.pass = diff.is_zero();
  } else {
    r.pass = r.achieved.at_least(static_cast<long>(*m.k));
    if (m.times_two && r.pass) {
      r.pass = padic_valuation(diff, 2).at_least(1);
    }
  }
  return r;
}

// (2k+1) A_k(x) prefix tables for the C01 grid, keyed by x
using PolyPrefixes = std::map<long long, std::vector<Integer>>;

PolyPrefixes build_poly_prefixes(long long x_min, long long x_max, std::uint64_t p_max) {
  PolyPrefixes m;
  for (long long x = x_min; x <= x_max; ++x) {
    m.emplace(x, apery_poly_prefix(Integer(static_cast<long>(x)), p_max));
  }
  return m;
}

std::vector<CheckResult> c01_rows_for_prime(std::uint64_t p, const PolyPrefixes& prefixes,
                                            const Modulus& mod) {
  std::vector<CheckResult> rows;
  for (const auto& [x, prefix] : prefixes) {
    const auto t0 = Clock::now();
    const int chi = legendre_symbol(Integer(static_cast<long>(x)), p);
    const Rational lhs(prefix.at(p));
    const Rational rhs = Rational(Integer(static_cast<unsigned long>(p))) * Rational(chi);
    CheckResult r = valuation_row(chi == 0 ? "C01z" : "C01", p, mod, lhs - rhs);
    r.informational = (chi == 0);
    r.params["x"] = x;
    r.elapsed_ms = ms_since(t0);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<CheckResult> kummer_rows_for_prime(std::uint64_t p, unsigned k_max,
                                               const BernoulliTable& table, const Modulus& mod) {
  const std::size_t needed = static_cast<std::size_t>(k_max) * (p - 1) + (p - 3);
  if (table.max_index() < needed) {
    throw std::out_of_range("kummer grid: Bernoulli table shorter than k_max(p-1)+b");
  }
  std::vector<CheckResult> rows;
  for (std::uint64_t b = 2; b + 3 <= p; b += 2) {
    // b <= p-3 keeps b != 0 (mod p-1) automatic
    for (unsigned k = 0; k <= k_max; ++k) {
      const auto t0 = Clock::now();
      const std::uint64_t idx = static_cast<std::uint64_t>(k) * (p - 1) + b;
      const Rational lhs = table.at(idx) / Rational(Integer(static_cast<unsigned long>(idx)));
      const Rational rhs = table.at(b) / Rational(Integer(static_cast<unsigned long>(b)));
      CheckResult r = valuation_row("C03", p, mod, lhs - rhs);
      r.params["b"] = static_cast<long long>(b);
      r.params["k"] = static_cast<long long>(k);
      r.elapsed_ms = ms_since(t0);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

// pass(C06) => pass(C05), and pass(C05) && pass(C04) => pass(C02), per prime
void assert_consistency_ladder(const std::vector<CheckResult>& results) {
  std::map<std::uint64_t, std::map<std::string, bool>> by_prime;
  for (const auto& r : results) {
    if (!r.evaluated || r.negative_control) continue;
    if (r.id == "C02" || r.id == "C04" || r.id == "C05" || r.id == "C06") {
      by_prime[r.p][r.id] = r.pass;
    }
  }
  for (const auto& [p, m] : by_prime) {
    const auto has = [&m](const char* id) { return m.count(id) != 0; };
    const auto ok = [&m](const char* id) { return m.at(id); };
    if (has("C06") && ok("C06") && has("C05") && !ok("C05")) {
      throw std::logic_error("valuation ladder broken at p=" + std::to_string(p) +
                             ": C06 passes but C05 does not");
    }
    if (has("C05") && ok("C05") && has("C04") && ok("C04") && has("C02") && !ok("C02")) {
      throw std::logic_error("valuation ladder broken at p=" + std::to_string(p) +
                             ": C05 and C04 pass but C02 does not");
    }
  }
}

}  // namespace

std::size_t required_bernoulli_depth(const std::vector<std::string>& ids,
                                     const SweepConfig& cfg) {
  std::size_t depth = 12;  // identities / small polynomial uses
  bool any_context_check = false;
  for (const auto& id : ids) {
    const CongruenceCheck* c = find_check(id);
    if (c != nullptr && c->kind == CheckKind::per_prime) any_context_check = true;
  }
  for (std::uint64_t p : cfg.primes) {
    if (p < 5) continue;
    if (any_context_check) depth = std::max(depth, static_cast<std::size_t>(2 * p - 4));
    if (contains(ids, "C03")) {
      depth = std::max(depth,
                       static_cast<std::size_t>(cfg.kummer_k_max) * (p - 1) + (p - 3));
    }
  }
  return depth;
}

std::uint64_t required_apery_depth(const std::vector<std::string>& ids, const SweepConfig& cfg) {
  std::uint64_t depth = 1;
  if (!cfg.primes.empty()) depth = std::max(depth, cfg.primes.back());
  if (contains(ids, "C07")) depth = std::max(depth, cfg.divisibility_n_max);
  return depth;
}

CheckResult run_check(const CongruenceCheck& check, std::uint64_t p, const CheckInputs& in) {
  if (p < check.min_prime) return skipped_row(check, p);
  const auto t0 = Clock::now();
  CheckResult r;
  if (check.eval_valuation) {
    r.id = check.id;
    r.p = p;
    const Modulus m = check.modulus(p);
    r.required_k = m.k;
    r.evaluated = true;
    r.achieved = check.eval_valuation(in);
    r.pass = m.k.has_value() ? r.achieved.at_least(static_cast<long>(*m.k))
                             : r.achieved.is_infinite();
  } else {
    const auto [lhs, rhs] = check.eval(in);
    r = valuation_row(check.id, p, check.modulus(p), lhs - rhs);
  }
  r.negative_control = check.negative_control;
  r.elapsed_ms = ms_since(t0);
  return r;
}

std::vector<CheckResult> run_divisibility(std::uint64_t n_max, const AperySums& sums) {
  if (n_max < 1) throw std::invalid_argument("run_divisibility: n_max must be >= 1");
  if (sums.n_max() + 1 < n_max) {
    throw std::out_of_range("run_divisibility: Apery prefix table too short");
  }
  const CongruenceCheck* check = find_check("C07");
  std::vector<CheckResult> rows;
  rows.reserve(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto t0 = Clock::now();
    CheckResult r;
    r.id = check->id;
    r.p = n;
    r.required_k = 3;
    r.evaluated = true;
    if (n == 1) {
      r.achieved = Valuation::infinity();
      r.pass = true;
    } else {
      // exponent of the largest power of n dividing the sum
      Integer rest = sums.odd3.at(n);
      const Integer nz(static_cast<unsigned long>(n));
      long e = 0;
      while (e < 64 && mpz_divisible_p(rest.get_mpz_t(), nz.get_mpz_t())) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), nz.get_mpz_t());
        ++e;
      }
      r.achieved = Valuation::of(e);
      r.pass = e >= 3;
    }
    r.elapsed_ms = ms_since(t0);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

struct PrimeWork {
  const std::vector<const CongruenceCheck*>* checks;
  const BernoulliTable* table;
  const AperySums* sums;
  const PolyPrefixes* prefixes;  // null when C01 not selected
  unsigned kummer_k_max;
};

std::vector<CheckResult> evaluate_prime(std::uint64_t p, const PrimeWork& w) {
  std::vector<CheckResult> rows;
  PrimeContext ctx;
  bool have_ctx = false;
  bool need_ctx = false;
  for (const auto* c : *w.checks) {
    if (c->kind == CheckKind::per_prime && p >= c->min_prime) {
      need_ctx = true;
      break;
    }
  }
  if (need_ctx && p >= 5) {
    ctx = prime_context(p, *w.table);
    have_ctx = true;
  }
  CheckInputs in{have_ctx ? &ctx : nullptr, w.sums};
  for (const auto* check : *w.checks) {
    switch (check->kind) {
      case CheckKind::per_prime:
        rows.push_back(run_check(*check, p, in));
        break;
      case CheckKind::grid_x: {
        if (p < check->min_prime || w.prefixes == nullptr) {
          rows.push_back(skipped_row(*check, p));
        } else {
          auto grid = c01_rows_for_prime(p, *w.prefixes, check->modulus(p));
          rows.insert(rows.end(), std::make_move_iterator(grid.begin()),
                      std::make_move_iterator(grid.end()));
        }
        break;
      }
      case CheckKind::grid_kummer: {
        if (p < check->min_prime) {
          rows.push_back(skipped_row(*check, p));
        } else {
          auto grid = kummer_rows_for_prime(p, w.kummer_k_max, *w.table, check->modulus(p));
          rows.insert(rows.end(), std::make_move_iterator(grid.begin()),
                      std::make_move_iterator(grid.end()));
        }
        break;
      }
      case CheckKind::per_n:
        break;  // handled once, outside the prime loop
    }
  }
  return rows;
}

}  // namespace

std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const SweepConfig& cfg,
                                    const BernoulliTable& table, const AperySums& sums) {
  std::vector<std::string> selected = ids;
  if (cfg.include_negative_controls && !contains(selected, "C06'")) {
    selected.push_back("C06'");
  }

  std::vector<const CongruenceCheck*> checks;
  for (const auto& id : selected) {
    const CongruenceCheck* c = find_check(id);
    if (c == nullptr) throw std::invalid_argument("unknown check id '" + id + "'");
    checks.push_back(c);
  }

  if (table.max_index() < required_bernoulli_depth(selected, cfg)) {
    throw std::out_of_range("run_checks: Bernoulli table too short for this sweep");
  }
  if (sums.n_max() < required_apery_depth(selected, cfg)) {
    throw std::out_of_range("run_checks: Apery tables too short for this sweep");
  }

  PolyPrefixes prefixes;
  const bool want_c01 = contains(selected, "C01");
  if (want_c01 && !cfg.primes.empty()) {
    prefixes = build_poly_prefixes(cfg.x_min, cfg.x_max, cfg.primes.back());
  }

  PrimeWork work{&checks, &table, &sums, want_c01 ? &prefixes : nullptr, cfg.kummer_k_max};

  const std::size_t n = cfg.primes.size();
  std::vector<std::vector<CheckResult>> buckets(n);

  if (cfg.parallelism <= 1) {
    // serial reference path; the parallel kernel below must match it byte for byte
    for (std::size_t i = 0; i < n; ++i) {
      buckets[i] = evaluate_prime(cfg.primes[i], work);
    }
  } else {
#ifdef _OPENMP
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.parallelism)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        buckets[static_cast<std::size_t>(i)] = evaluate_prime(
            cfg.primes[static_cast<std::size_t>(i)], work);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
#else
    for (std::size_t i = 0; i < n; ++i) {
      buckets[i] = evaluate_prime(cfg.primes[i], work);
    }
#endif
  }

  std::vector<CheckResult> results;
  for (auto& b : buckets) {
    results.insert(results.end(), std::make_move_iterator(b.begin()),
                   std::make_move_iterator(b.end()));
  }

  if (contains(selected, "C07")) {
    auto rows = run_divisibility(cfg.divisibility_n_max, sums);
    results.insert(results.end(), std::make_move_iterator(rows.begin()),
                   std::make_move_iterator(rows.end()));
  }

  assert_consistency_ladder(results);
  sort_results(results);
  return results;
}

std::vector<CheckResult> run_suite(const std::string& suite_id, const SweepConfig& cfg,
                                   const BernoulliTable& table, const AperySums& sums) {
  return run_checks(suite_checks(suite_id), cfg, table, sums);
}

std::vector<CheckResult> run_c01_grid(const std::vector<std::uint64_t>& primes, long long x_min,
                                      long long x_max, int parallelism) {
  SweepConfig cfg;
  cfg.primes = primes;
  cfg.parallelism = parallelism;
  cfg.x_min = x_min;
  cfg.x_max = x_max;
  BernoulliTable table(12);
  const AperySums sums = AperySums::build(primes.empty() ? 1 : primes.back());
  return run_checks({"C01"}, cfg, table, sums);
}

std::vector<CheckResult> run_kummer_grid(const std::vector<std::uint64_t>& primes,
                                         unsigned k_max, const BernoulliTable& table,
                                         int parallelism) {
  SweepConfig cfg;
  cfg.primes = primes;
  cfg.parallelism = parallelism;
  cfg.kummer_k_max = k_max;
  const AperySums sums = AperySums::build(primes.empty() ? 1 : primes.back());
  return run_checks({"C03"}, cfg, table, sums);
}

void sort_results(std::vector<CheckResult>& results) {
  std::stable_sort(results.begin(), results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.sort_key() < b.sort_key();
                   });
}

}  // namespace apery
