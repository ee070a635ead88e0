#pragma once

#include <cstdint>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

// A_n = sum_k C(n+k,k)^2 C(n,k)^2
Integer apery_number(std::uint64_t n);

// A_n(x) = sum_k C(n+k,k)^2 C(n,k)^2 x^k; A_n(1) = A_n
Integer apery_poly(std::uint64_t n, const Integer& x);

// (2^{p-1} - 1)/p for an odd prime p; exact by Fermat's little theorem.
Integer fermat_quotient_2(std::uint64_t p);

// A_0..A_{n_max} plus prefix sums of the odd-weighted series.
struct AperySums {
  std::vector<Integer> apery;  // apery[n] = A_n, 0 <= n <= n_max
  std::vector<Integer> odd1;   // odd1[n] = sum_{k<n} (2k+1)   A_k, 0 <= n <= n_max+1
  std::vector<Integer> odd3;   // odd3[n] = sum_{k<n} (2k+1)^3 A_k
  std::uint64_t n_max() const { return apery.size() - 1; }
  static AperySums build(std::uint64_t n_max);
};

// v[n] = sum_{k<n} (2k+1) A_k(x) for 0 <= n <= n_max+1
std::vector<Integer> apery_poly_prefix(const Integer& x, std::uint64_t n_max);

}  // namespace apery
