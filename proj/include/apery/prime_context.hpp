#pragma once

#include <cstdint>

#include "apery/bernoulli.hpp"

namespace apery {

// The five convolution sums over k = 2..p-3 with terms B_k B_{p-3-k}:
//   a: plain   b: weight 2^k   d: /k   e: 2^k/k   f: 2^{p-3-k}/k
struct ConvolutionSums {
  Rational a, b, d, e, f;
};

ConvolutionSums convolution_sums(std::uint64_t p, const BernoulliTable& table);

// Every per-prime scalar the congruence catalog consumes, computed exactly in
// one O(p) pass over k plus the convolution loop. Immutable once built;
// contexts for distinct primes build independently (safe to construct in parallel).
struct PrimeContext {
  std::uint64_t p = 0;
  std::uint64_t half = 0;  // (p-1)/2

  Integer q2;  // Fermat quotient (2^{p-1}-1)/p

  Rational bern_p3;   // B_{p-3}
  Rational bern_p5;   // B_{p-5}  (B_0 when p = 5)
  Rational bern_2p4;  // B_{2p-4}

  // h_full[m] = H_{p-1}^{(m)}, h_half[m] = H_{(p-1)/2}^{(m)}, m = 1..5 (index 0 unused)
  Rational h_full[6];
  Rational h_half[6];

  ConvolutionSums conv;
  Rational x_term;  // B_{p-3}/(p-3) - B_{2p-4}/(4p-8)

  Rational sigma1;  // sum_{k=0}^{p-1} 1/(2k+1)
  Rational sigma2;  // sum_{k=0}^{p-1} H_k^{(2)}/(2k+1)

  // alternating / multiple harmonic sums at n = p-1
  Rational mhs_1_m3;   // H(1,-3;p-1)
  Rational mhs_2_m1;   // H(2,-1;p-1)
  Rational mhs_2_3;    // H(2,3;p-1)
  Rational mhs_1_4;    // H(1,4;p-1)
  Rational mhs_4_1;    // H(4,1;p-1)
  Rational mhs_2_2;    // H(2,2;p-1)
  Rational mhs_2_2_1;  // H(2,2,1;p-1)
  // and at n = (p-1)/2
  Rational mhs_3_1_half;  // H(3,1;(p-1)/2)
  Rational mhs_2_2_half;  // H(2,2;(p-1)/2)

  // aggregate sums over k
  Rational sum_h2_over_k;             // sum_{k=1}^{p-1} H_k^{(2)}/k
  Rational sum_h2_over_k_half;        // sum_{k=1}^{(p-1)/2} H_k^{(2)}/k
  Rational sum_h22_over_k;            // sum_{k=1}^{p-1} H(2,2;k)/k
  Rational sum_h22;                   // sum_{k=0}^{p-1} H(2,2;k)
  Rational sum_h24_h42;               // sum_{k=0}^{p-1} (H(2,4;k) + H(4,2;k))
  Rational sum_h222;                  // sum_{k=0}^{p-1} H(2,2,2;k)
  Rational sum_h2_even_over_k_half;   // sum_{k=1}^{(p-1)/2} H_{2k}^{(2)}/k
};

// p must be a prime >= 5 and the table must reach index 2p-4.
PrimeContext prime_context(std::uint64_t p, const BernoulliTable& table);

}  // namespace apery
