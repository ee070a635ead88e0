#pragma once

#include <cstdint>
#include <string>

#include "apery/bernoulli.hpp"

namespace apery {

// Outcome of one exact identity instance; pass iff lhs == rhs exactly.
struct IdentityReport {
  std::string identity_id;
  std::string instance;
  Rational lhs;
  Rational rhs;
  bool pass = false;
};

// The two closed forms of A_n:
//   sum_k C(n+k,k)^2 C(n,k)^2  ==  sum_k C(n+k,2k)^2 C(2k,k)^2
IdentityReport check_apery_forms(std::uint64_t n);

// sum_{m<n} (2m+1) C(m+k,2k)^2 == (n-k)^2/(2k+1) * C(n+k,2k)^2
IdentityReport check_odd_binomial_sum(std::uint64_t n, std::uint64_t k);

// sum_{m<n} (2m+1)^3 C(m+k,2k)^2 == (n-k)^2 (2n^2-k-1)/(k+1) * C(n+k,2k)^2
IdentityReport check_cubic_binomial_sum(std::uint64_t n, std::uint64_t k);

// B_n(1/2) == (2^{1-n} - 1) B_n
IdentityReport check_bernoulli_half(unsigned n, const BernoulliTable& table);

// sum_{k=1}^{q-1} (-1)^k/k * C(q-1,k) C(q+k,k) == -2 H_{q-1} for odd q >= 3
IdentityReport check_alternating_binomial_sum(std::uint64_t q);

// sum_{k<n} k^{m-1} == (B_m(n) - B_m(1))/m for n >= 2, m >= 1.
// B_m(1) = B_m except at m = 1, so the familiar "- B_m" form holds for m >= 2.
IdentityReport check_power_sum(std::uint64_t n, unsigned m, const BernoulliTable& table);

// Deliberately perturbed right-hand sides (one constant each). Every variant must
// fail on some small instance; a checker that accepts them is vacuous.
namespace mutated {
IdentityReport check_apery_forms(std::uint64_t n);                                  // C(n+k,2k) -> C(n+k+1,2k)
IdentityReport check_odd_binomial_sum(std::uint64_t n, std::uint64_t k);            // 2k+1 -> 2k+2
IdentityReport check_cubic_binomial_sum(std::uint64_t n, std::uint64_t k);          // k+1 -> k+2
IdentityReport check_bernoulli_half(unsigned n, const BernoulliTable& table);       // 2^{1-n} -> 2^{2-n}
IdentityReport check_alternating_binomial_sum(std::uint64_t q);                     // -2 -> -3
IdentityReport check_power_sum(std::uint64_t n, unsigned m, const BernoulliTable&); // /m -> /(m+1)
}  // namespace mutated

}  // namespace apery
