#include "apery/prime_context.hpp"

#include <stdexcept>

#include "apery/apery_seq.hpp"
#include "apery/modular.hpp"

namespace apery {

ConvolutionSums convolution_sums(std::uint64_t p, const BernoulliTable& table) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("convolution_sums: p must be a prime >= 5");
  }
  if (table.max_index() < p - 3) {
    throw std::out_of_range("convolution_sums: table must reach index p-3");
  }
  ConvolutionSums s;
  Integer pow_up(4);  // 2^k at k = 2
  Integer pow_down;   // 2^{p-3-k} at k = 2
  mpz_ui_pow_ui(pow_down.get_mpz_t(), 2, static_cast<unsigned long>(p - 5));
  for (std::uint64_t k = 2; k + 3 <= p; ++k) {
    const Rational& bk = table.at(k);
    const Rational& bo = table.at(p - 3 - k);
    if (!bk.is_zero() && !bo.is_zero()) {
      const Rational t = bk * bo;
      const Rational t_over_k = t / Rational(Integer(static_cast<unsigned long>(k)));
      s.a += t;
      s.b += Rational(pow_up) * t;
      s.d += t_over_k;
      s.e += Rational(pow_up) * t_over_k;
      s.f += Rational(pow_down) * t_over_k;
    }
    pow_up *= 2;
    mpz_tdiv_q_2exp(pow_down.get_mpz_t(), pow_down.get_mpz_t(), 1);
  }
  return s;
}

PrimeContext prime_context(std::uint64_t p, const BernoulliTable& table) {
  if (p < 5 || !is_prime(p)) {
    throw std::invalid_argument("prime_context: p must be a prime >= 5");
  }
  if (table.max_index() < 2 * p - 4) {
    throw std::out_of_range("prime_context: table must reach index 2p-4");
  }

  PrimeContext c;
  c.p = p;
  c.half = (p - 1) / 2;
  c.q2 = fermat_quotient_2(p);
  c.bern_p3 = table.at(p - 3);
  c.bern_p5 = table.at(p - 5);
  c.bern_2p4 = table.at(2 * p - 4);
  c.conv = convolution_sums(p, table);
  c.x_term = c.bern_p3 / Rational(Integer(static_cast<unsigned long>(p - 3))) -
             c.bern_2p4 / Rational(Integer(static_cast<unsigned long>(4 * p - 8)));

  // one pass over k = 1..p-1; deeper chains update before the shallower
  // prefixes they consume (each uses the state at k-1)
  Rational h1, h2, h3, h4, h5;       // H_k^{(m)} running prefixes
  Rational t22, t222, t221;          // H(2,2;k), H(2,2,2;k), H(2,2,1;k)
  Rational t24, t42, t23, t14, t41;  // H(2,4), H(4,2), H(2,3), H(1,4), H(4,1)
  Rational t1m3, t2m1, t31;          // H(1,-3), H(2,-1), H(3,1)

  c.sigma1 = Rational(1);  // k = 0 term

  for (std::uint64_t k = 1; k <= p - 1; ++k) {
    const Integer kz(static_cast<unsigned long>(k));
    const Rational inv1(Integer(1), kz);
    const Rational inv2(Integer(1), kz* kz);
    const Rational inv3(Integer(1), kz* kz* kz);
    const Rational inv4(Integer(1), kz* kz* kz* kz);
    const Rational inv5(Integer(1), kz* kz* kz* kz* kz);
    const bool odd = (k & 1) != 0;

    t222 += t22 * inv2;
    t221 += t22 * inv1;

    t24 += h2 * inv4;
    t42 += h4 * inv2;
    t23 += h2 * inv3;
    t14 += h1 * inv4;
    t41 += h4 * inv1;
    t31 += h3 * inv1;
    if (odd) {
      t1m3 -= h1 * inv3;
      t2m1 -= h2 * inv1;
    } else {
      t1m3 += h1 * inv3;
      t2m1 += h2 * inv1;
    }
    t22 += h2 * inv2;

    h1 += inv1;
    h2 += inv2;
    h3 += inv3;
    h4 += inv4;
    h5 += inv5;

    // aggregates use the prefixes at k (after the updates above)
    c.sum_h2_over_k += h2 * inv1;
    if (k <= c.half) c.sum_h2_over_k_half += h2 * inv1;
    c.sum_h22_over_k += t22 * inv1;
    c.sum_h22 += t22;
    c.sum_h24_h42 += t24 + t42;
    c.sum_h222 += t222;
    if ((k & 1) == 0) {
      // H_{2j}^{(2)}/j with j = k/2
      c.sum_h2_even_over_k_half += h2 * Rational(Integer(2), kz);
    }
    const Rational inv_odd(Integer(1), Integer(static_cast<unsigned long>(2 * k + 1)));
    c.sigma1 += inv_odd;
    c.sigma2 += h2 * inv_odd;

    if (k == c.half) {
      c.h_half[1] = h1;
      c.h_half[2] = h2;
      c.h_half[3] = h3;
      c.h_half[4] = h4;
      c.h_half[5] = h5;
      c.mhs_2_2_half = t22;
      c.mhs_3_1_half = t31;
    }
  }

  c.h_full[1] = h1;
  c.h_full[2] = h2;
  c.h_full[3] = h3;
  c.h_full[4] = h4;
  c.h_full[5] = h5;
  c.mhs_1_m3 = t1m3;
  c.mhs_2_m1 = t2m1;
  c.mhs_2_3 = t23;
  c.mhs_1_4 = t14;
  c.mhs_4_1 = t41;
  c.mhs_2_2 = t22;
  c.mhs_2_2_1 = t221;
  return c;
}

}  // namespace apery
