#pragma once

#include <cstdint>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

// x in [1, m-1] with a*x == 1 (mod m); throws std::domain_error when gcd(a,m) != 1.
Integer mod_inverse(const Integer& a, const Integer& m);

// Legendre symbol (x|p) for an odd prime p, by Euler's criterion.
int legendre_symbol(const Integer& x, std::uint64_t p);

// p^k with p an odd prime and k >= 1.
struct PrimePowerModulus {
  std::uint64_t p;
  unsigned k;
  PrimePowerModulus(std::uint64_t p_, unsigned k_);
  Integer value() const;
};

}  // namespace apery
