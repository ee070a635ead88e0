#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apery/apery_seq.hpp"
#include "apery/prime_context.hpp"

namespace apery {

// Requirement on the difference lhs-rhs at prime p: v_p >= k, and additionally
// v_2 >= 1 when times_two is set (the "mod 2p^6" case). An absent k demands
// exact equality (difference identically zero).
struct Modulus {
  std::optional<unsigned> k;
  bool times_two = false;
};

struct CheckInputs {
  const PrimeContext* ctx = nullptr;  // null below p = 5 (only grid checks run there)
  const AperySums* sums = nullptr;
};

enum class CheckKind {
  per_prime,    // one evaluation per prime
  grid_x,       // one evaluation per (prime, integer x)
  grid_kummer,  // one evaluation per (prime, even b, shift k)
  per_n         // one evaluation per n >= 1 (not prime-indexed)
};

struct CongruenceCheck {
  std::string id;
  std::string statement;  // human-readable form of the claim
  std::uint64_t min_prime = 3;
  CheckKind kind = CheckKind::per_prime;
  std::function<Modulus(std::uint64_t)> modulus;
  // plain checks produce the two sides ...
  std::function<std::pair<Rational, Rational>(const CheckInputs&)> eval;
  // ... checks that quantify internally (e.g. over all k < p) produce the
  // worst achieved valuation directly
  std::function<Valuation(const CheckInputs&)> eval_valuation;
  bool negative_control = false;  // must fail; passing signals a broken engine
};

struct CheckResult {
  std::string id;
  std::uint64_t p = 0;  // the prime (or n for per_n checks)
  std::map<std::string, long long> params;
  std::optional<unsigned> required_k;  // absent = exact equality required
  Valuation achieved = Valuation::of(0);
  bool evaluated = false;  // false = skipped (p below the check's floor)
  bool pass = false;       // the raw valuation condition
  bool negative_control = false;
  bool informational = false;  // failures do not fail a suite (C01 with p | x)
  double elapsed_ms = 0.0;

  std::string status() const;  // "pass" | "fail" | "skip" | "expected-fail"
  // true when this row makes a suite fail
  bool is_failure() const;
  std::string sort_key() const;
};

// The full catalog, C01..C35 plus the negative control C06'.
const std::vector<CongruenceCheck>& catalog();
const CongruenceCheck* find_check(const std::string& id);

// Known suite names: all, theorem1, theorem2, lemmas, imports,
// identities-as-congruences. Throws std::invalid_argument otherwise.
std::vector<std::string> suite_checks(const std::string& suite_id);

// ids summarized separately and excluded from suite pass/fail (p | x rows)
bool is_informational_id(const std::string& id);

}  // namespace apery
