#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apery/catalog.hpp"

namespace apery {

struct SweepConfig {
  std::vector<std::uint64_t> primes;  // ascending
  int parallelism = 1;
  std::uint64_t divisibility_n_max = 300;  // C07
  long long x_min = -20, x_max = 20;       // C01 grid
  unsigned kummer_k_max = 1;               // C03 shift range inside suites
  bool include_negative_controls = false;
};

// Bernoulli depth a run needs: 2p-4 for contexts, k_max(p-1)+(p-3) when C03 runs.
std::size_t required_bernoulli_depth(const std::vector<std::string>& ids, const SweepConfig& cfg);
// Largest index the Apery prefix tables must reach.
std::uint64_t required_apery_depth(const std::vector<std::string>& ids, const SweepConfig& cfg);

// One check at one prime. Skipped (not failed) when p is below the check's floor.
CheckResult run_check(const CongruenceCheck& check, std::uint64_t p, const CheckInputs& in);

// Run the given checks over cfg.primes. Results are ordered by (id, p, params)
// and are identical for every parallelism level.
std::vector<CheckResult> run_checks(const std::vector<std::string>& ids, const SweepConfig& cfg,
                                    const BernoulliTable& table, const AperySums& sums);

std::vector<CheckResult> run_suite(const std::string& suite_id, const SweepConfig& cfg,
                                   const BernoulliTable& table, const AperySums& sums);

// n^3 | sum_{k<n} (2k+1)^3 A_k for n = 1..n_max (C07); rows carry p = n.
std::vector<CheckResult> run_divisibility(std::uint64_t n_max, const AperySums& sums);

// sum_{k<p} (2k+1) A_k(x) == p (x|p) (mod p^2) over a rectangle of (p, x).
// p | x rows are emitted under the informational sub-id C01z.
std::vector<CheckResult> run_c01_grid(const std::vector<std::uint64_t>& primes, long long x_min,
                                      long long x_max, int parallelism);

// B_{k(p-1)+b}/(k(p-1)+b) == B_b/b (mod p) over admissible even b and k <= k_max.
std::vector<CheckResult> run_kummer_grid(const std::vector<std::uint64_t>& primes, unsigned k_max,
                                         const BernoulliTable& table, int parallelism);

void sort_results(std::vector<CheckResult>& results);

}  // namespace apery
