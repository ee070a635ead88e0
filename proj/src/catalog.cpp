#include "apery/catalog.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace apery {

namespace {

Rational ppow(const CheckInputs& in, unsigned e) {
  return Rational(int_pow(Integer(static_cast<unsigned long>(in.ctx->p)), e));
}

Rational rp(std::uint64_t v) { return Rational(Integer(static_cast<unsigned long>(v))); }

std::function<Modulus(std::uint64_t)> fixed_mod(unsigned k, bool times_two = false) {
  return [k, times_two](std::uint64_t) { return Modulus{k, times_two}; };
}

std::function<Modulus(std::uint64_t)> exact_mod() {
  return [](std::uint64_t) { return Modulus{std::nullopt, false}; };
}

using Eval = std::function<std::pair<Rational, Rational>(const CheckInputs&)>;

CongruenceCheck per_prime(std::string id, std::string statement, std::uint64_t min_prime,
                          unsigned k, Eval eval, bool times_two = false) {
  CongruenceCheck c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.min_prime = min_prime;
  c.kind = CheckKind::per_prime;
  c.modulus = fixed_mod(k, times_two);
  c.eval = std::move(eval);
  return c;
}

// sum over the theorem-side odd-weighted series, read from the shared prefix tables
Rational odd1_sum(const CheckInputs& in) {
  return Rational(in.sums->odd1.at(in.ctx->p));
}
Rational odd3_sum(const CheckInputs& in) {
  return Rational(in.sums->odd3.at(in.ctx->p));
}

// worst v_p over 0 <= k <= p-1 of the difference between C(p-1,k)^2 C(p+k,k)^2
// and its harmonic-sum expansion (order p^5, or p^7 when refined).
Valuation binom_product_valuation(const CheckInputs& in, bool refined) {
  const PrimeContext& c = *in.ctx;
  const std::uint64_t p = c.p;
  const Rational p2 = Rational(int_pow(Integer(static_cast<unsigned long>(p)), 2));
  const Rational p4 = p2 * p2;
  const Rational p6 = p4 * p2;

  Integer u(1);  // C(p-1,k) C(p+k,k)
  Rational h2, h4, t22, t24, t42, t222;
  bool any_finite = false;
  long worst = 0;

  for (std::uint64_t k = 0; k <= p - 1; ++k) {
    if (k > 0) {
      const Integer kz(static_cast<unsigned long>(k));
      const Rational inv2(Integer(1), kz* kz);
      const Rational inv4(Integer(1), kz* kz* kz* kz);
      t222 += t22 * inv2;
      t24 += h2 * inv4;
      t42 += h4 * inv2;
      t22 += h2 * inv2;
      h2 += inv2;
      h4 += inv4;
      mpz_mul_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>((p - k) * (p + k)));
      mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(k * k));
    }
    Rational rhs = Rational(1) - Rational(2) * p2 * h2 + p4 * h4 + Rational(4) * p4 * t22;
    if (refined) {
      rhs -= Rational(2) * p6 * (t24 + t42) + Rational(8) * p6 * t222;
    }
    const Rational diff = Rational(u * u) - rhs;
    if (!diff.is_zero()) {
      const Valuation v = padic_valuation(diff, p);
      if (!any_finite || v.value() < worst) {
        worst = v.value();
        any_finite = true;
      }
    }
  }
  return any_finite ? Valuation::of(worst) : Valuation::infinity();
}

std::vector<CongruenceCheck> build_catalog() {
  std::vector<CongruenceCheck> cat;

  {
    CongruenceCheck c;
    c.id = "C01";
    c.statement = "sum_{k<p} (2k+1) A_k(x) = p (x|p)  (mod p^2)";
    c.min_prime = 3;
    c.kind = CheckKind::grid_x;
    c.modulus = fixed_mod(2);
    cat.push_back(std::move(c));
  }

  cat.push_back(per_prime(
      "C02", "sum_{k<p} (2k+1) A_k = p + 7/6 p^4 B_{p-3}  (mod p^5)", 5, 5,
      [](const CheckInputs& in) {
        return std::pair(odd1_sum(in),
                         rp(in.ctx->p) + Rational(7, 6) * ppow(in, 4) * in.ctx->bern_p3);
      }));

  {
    CongruenceCheck c;
    c.id = "C03";
    c.statement = "B_{k(p-1)+b}/(k(p-1)+b) = B_b/b  (mod p), even b != 0 (mod p-1)";
    c.min_prime = 5;
    c.kind = CheckKind::grid_kummer;
    c.modulus = fixed_mod(1);
    cat.push_back(std::move(c));
  }

  cat.push_back(per_prime("C04", "H_{p-1} = -p^2 B_{p-3}/3  (mod p^3)", 5, 3,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_full[1],
                                             -ppow(in, 2) * in.ctx->bern_p3 / Rational(3));
                          }));

  const auto theorem1_rhs = [](const CheckInputs& in) {
    return rp(in.ctx->p) - Rational(7, 2) * ppow(in, 2) * in.ctx->h_full[1];
  };
  cat.push_back(per_prime("C05", "sum_{k<p} (2k+1) A_k = p - 7/2 p^2 H_{p-1}  (mod p^5)", 5, 5,
                          [theorem1_rhs](const CheckInputs& in) {
                            return std::pair(odd1_sum(in), theorem1_rhs(in));
                          }));
  cat.push_back(per_prime("C06", "sum_{k<p} (2k+1) A_k = p - 7/2 p^2 H_{p-1}  (mod p^6)", 7, 6,
                          [theorem1_rhs](const CheckInputs& in) {
                            return std::pair(odd1_sum(in), theorem1_rhs(in));
                          }));
  {
    // negative control: the 7/2 constant replaced by 5/2; must fail at every prime
    CongruenceCheck c = per_prime(
        "C06'", "sum_{k<p} (2k+1) A_k = p - 5/2 p^2 H_{p-1}  (mod p^6)  [negative control]", 7,
        6, [](const CheckInputs& in) {
          return std::pair(odd1_sum(in),
                           rp(in.ctx->p) - Rational(5, 2) * ppow(in, 2) * in.ctx->h_full[1]);
        });
    c.negative_control = true;
    cat.push_back(std::move(c));
  }

  {
    CongruenceCheck c;
    c.id = "C07";
    c.statement = "n^3 | sum_{k<n} (2k+1)^3 A_k";
    c.min_prime = 3;  // unused; rows are n-indexed
    c.kind = CheckKind::per_n;
    c.modulus = fixed_mod(3);
    cat.push_back(std::move(c));
  }

  cat.push_back(per_prime(
      "C08", "sum_{k<p} (2k+1)^3 A_k = p^3  (mod 2p^6)", 5, 6,
      [](const CheckInputs& in) { return std::pair(odd3_sum(in), ppow(in, 3)); },
      /*times_two=*/true));

  cat.push_back(per_prime(
      "C09", "sum_{k<p} (2k+1)^3 A_k = p^3 + 4p^4 H_{p-1} + 6/5 p^8 B_{p-5}  (mod p^9)", 5, 9,
      [](const CheckInputs& in) {
        return std::pair(odd3_sum(in), ppow(in, 3) + Rational(4) * ppow(in, 4) * in.ctx->h_full[1] +
                                           Rational(6, 5) * ppow(in, 8) * in.ctx->bern_p5);
      }));

  cat.push_back(per_prime("C10", "2 H_{p-1} + p H_{p-1}^(2) = 2/5 p^4 B_{p-5}  (mod p^5)", 7, 5,
                          [](const CheckInputs& in) {
                            return std::pair(
                                Rational(2) * in.ctx->h_full[1] + rp(in.ctx->p) * in.ctx->h_full[2],
                                Rational(2, 5) * ppow(in, 4) * in.ctx->bern_p5);
                          }));

  cat.push_back(per_prime("C11", "H_{(p-1)/2} = -2 q_p(2)  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_half[1],
                                             Rational(-2) * Rational(in.ctx->q2));
                          }));

  cat.push_back(per_prime(
      "C12", "H_{p-1}^(2) = (4/3 B_{p-3} - 1/2 B_{2p-4}) p + (4/9 B_{p-3} - 1/4 B_{2p-4}) p^2  "
             "(mod p^3)",
      7, 3, [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.h_full[2],
                         (Rational(4, 3) * c.bern_p3 - Rational(1, 2) * c.bern_2p4) * rp(c.p) +
                             (Rational(4, 9) * c.bern_p3 - Rational(1, 4) * c.bern_2p4) *
                                 ppow(in, 2));
      }));

  cat.push_back(per_prime(
      "C13", "H_{(p-1)/2}^(2) = (14/3 B_{p-3} - 7/4 B_{2p-4}) p + (14/9 B_{p-3} - 7/8 B_{2p-4}) "
             "p^2  (mod p^3)",
      7, 3, [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.h_half[2],
                         (Rational(14, 3) * c.bern_p3 - Rational(7, 4) * c.bern_2p4) * rp(c.p) +
                             (Rational(14, 9) * c.bern_p3 - Rational(7, 8) * c.bern_2p4) *
                                 ppow(in, 2));
      }));

  cat.push_back(per_prime("C14", "H_{p-1}^(3) = -6/5 p^2 B_{p-5}  (mod p^3)", 7, 3,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_full[3],
                                             Rational(-6, 5) * ppow(in, 2) * in.ctx->bern_p5);
                          }));

  cat.push_back(per_prime(
      "C15", "H_{(p-1)/2}^(3) = 6 (2 B_{p-3}/(p-3) - B_{2p-4}/(2p-4))  (mod p^2)", 7, 2,
      [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.h_half[3],
                         Rational(6) * (Rational(2) * c.bern_p3 / rp(c.p - 3) -
                                        c.bern_2p4 / rp(2 * c.p - 4)));
      }));

  cat.push_back(per_prime("C16", "H_{p-1}^(4) = 4/5 p B_{p-5}  (mod p^2)", 7, 2,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_full[4],
                                             Rational(4, 5) * rp(in.ctx->p) * in.ctx->bern_p5);
                          }));

  cat.push_back(per_prime("C17", "H_{(p-1)/2}^(4) = 0  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_half[4], Rational(0));
                          }));

  // false at p = 7 (the valuation is only 1 there); holds from 11 on
  cat.push_back(per_prime("C18", "H_{p-1}^(5) = 0  (mod p^2), p >= 11", 11, 2,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_full[5], Rational(0));
                          }));

  cat.push_back(per_prime("C19a", "B_{2p-4} = 4/3 B_{p-3}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->bern_2p4,
                                             Rational(4, 3) * in.ctx->bern_p3);
                          }));

  cat.push_back(per_prime(
      "C19b", "H_{p-1}^(2) = (4/3 B_{p-3} - 1/2 B_{2p-4}) p + 1/9 p^2 B_{p-3}  (mod p^3)", 7, 3,
      [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.h_full[2],
                         (Rational(4, 3) * c.bern_p3 - Rational(1, 2) * c.bern_2p4) * rp(c.p) +
                             Rational(1, 9) * ppow(in, 2) * c.bern_p3);
      }));

  cat.push_back(per_prime(
      "C19c", "H_{(p-1)/2}^(2) = (14/3 B_{p-3} - 7/4 B_{2p-4}) p + 7/18 p^2 B_{p-3}  (mod p^3)",
      7, 3, [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.h_half[2],
                         (Rational(14, 3) * c.bern_p3 - Rational(7, 4) * c.bern_2p4) * rp(c.p) +
                             Rational(7, 18) * ppow(in, 2) * c.bern_p3);
      }));

  cat.push_back(per_prime(
      "C19d", "H_{p-1} = (1/4 B_{2p-4} - 2/3 B_{p-3}) p^2 - 1/18 p^3 B_{p-3}  (mod p^4)", 7, 4,
      [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.h_full[1],
                         (Rational(1, 4) * c.bern_2p4 - Rational(2, 3) * c.bern_p3) * ppow(in, 2) -
                             Rational(1, 18) * ppow(in, 3) * c.bern_p3);
      }));

  cat.push_back(per_prime("C20", "D - 4F = 2B - 2A - q_p(2) B_{p-3}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            const auto& c = *in.ctx;
                            return std::pair(c.conv.d - Rational(4) * c.conv.f,
                                             Rational(2) * c.conv.b - Rational(2) * c.conv.a -
                                                 Rational(c.q2) * c.bern_p3);
                          }));

  cat.push_back(per_prime("C21a1", "H(1,-3;p-1) = B - A  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            const auto& c = *in.ctx;
                            return std::pair(c.mhs_1_m3, c.conv.b - c.conv.a);
                          }));

  cat.push_back(per_prime("C21a2", "B - A = 2E - 2D + 2 q_p(2) B_{p-3}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            const auto& c = *in.ctx;
                            return std::pair(c.conv.b - c.conv.a,
                                             Rational(2) * c.conv.e - Rational(2) * c.conv.d +
                                                 Rational(2) * Rational(c.q2) * c.bern_p3);
                          }));

  cat.push_back(per_prime("C21b", "5/2 D - 2E - 2F - 3/2 q_p(2) B_{p-3} = 0  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            const auto& c = *in.ctx;
                            return std::pair(Rational(5, 2) * c.conv.d - Rational(2) * c.conv.e -
                                                 Rational(2) * c.conv.f -
                                                 Rational(3, 2) * Rational(c.q2) * c.bern_p3,
                                             Rational(0));
                          }));

  cat.push_back(per_prime(
      "C22", "H(3,1;(p-1)/2) = H_{(p-1)/2}^(3) H_{(p-1)/2} - 4B + 4A  (mod p)", 7, 1,
      [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.mhs_3_1_half, c.h_half[3] * c.h_half[1] - Rational(4) * c.conv.b +
                                             Rational(4) * c.conv.a);
      }));

  cat.push_back(per_prime(
      "C23", "sum_{k<=(p-1)/2} H_k^(2)/k = 3/(2p^2) H_{p-1} + 1/2 H_{(p-1)/2}^(3) + 1/2 "
             "H_{p-1}^(2) H_{(p-1)/2} - p H_{(p-1)/2}^(3) H_{(p-1)/2} + 4p(B-A)  (mod p)",
      7, 1, [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        const Rational rhs = Rational(3, 2) / ppow(in, 2) * c.h_full[1] +
                             Rational(1, 2) * c.h_half[3] +
                             Rational(1, 2) * c.h_full[2] * c.h_half[1] -
                             rp(c.p) * c.h_half[3] * c.h_half[1] +
                             Rational(4) * rp(c.p) * (c.conv.b - c.conv.a);
        return std::pair(c.sum_h2_over_k_half, rhs);
      }));

  cat.push_back(per_prime("C24", "sum_{k<p} H_k^(2)/k = 3 H_{p-1}/p^2  (mod p^2)", 3, 2,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->sum_h2_over_k,
                                             Rational(3) * in.ctx->h_full[1] / ppow(in, 2));
                          }));

  cat.push_back(per_prime(
      "C25", "H(2,-1;p-1) = -3/2 X - 7/6 p q_p(2) B_{p-3} + p(B-A)  (mod p^2)", 7, 2,
      [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.mhs_2_m1,
                         Rational(-3, 2) * c.x_term -
                             Rational(7, 6) * rp(c.p) * Rational(c.q2) * c.bern_p3 +
                             rp(c.p) * (c.conv.b - c.conv.a));
      }));

  cat.push_back(per_prime(
      "C26", "Sigma1 = 1/p - 2p (H_{p-1}^(2) - 1/4 H_{(p-1)/2}^(2)) + 1/2 p^2 H_{(p-1)/2}^(3)  "
             "(mod p^4)",
      7, 4, [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        const Rational rhs = Rational(1) / rp(c.p) -
                             Rational(2) * rp(c.p) *
                                 (c.h_full[2] - Rational(1, 4) * c.h_half[2]) +
                             Rational(1, 2) * ppow(in, 2) * c.h_half[3];
        return std::pair(c.sigma1, rhs);
      }));

  cat.push_back(per_prime(
      "C27", "Sigma2 = H_{(p-1)/2}^(2)/p + 21 H_{p-1}/(2p^2)  (mod p^2)", 7, 2,
      [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.sigma2, c.h_half[2] / rp(c.p) +
                                       Rational(21, 2) * c.h_full[1] / ppow(in, 2));
      }));

  cat.push_back(per_prime("C28", "sum_{k<p} H(2,2;k)/k = -1/2 B_{p-5}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->sum_h22_over_k,
                                             Rational(-1, 2) * in.ctx->bern_p5);
                          }));

  cat.push_back(per_prime(
      "C29", "sum_{k<p} H_k^(2)/k = 3 H_{p-1}/p^2 - 1/2 p^2 B_{p-5}  (mod p^3)", 7, 3,
      [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        return std::pair(c.sum_h2_over_k, Rational(3) * c.h_full[1] / ppow(in, 2) -
                                              Rational(1, 2) * ppow(in, 2) * c.bern_p5);
      }));

  cat.push_back(per_prime(
      "C30a", "sum_{k<p} H(2,2;k) = -p/2 H_{p-1}^(4) - 3 H_{p-1}/p^2 + H_{p-1}^(3) + 1/2 p^2 "
              "B_{p-5}  (mod p^3)",
      7, 3, [](const CheckInputs& in) {
        const auto& c = *in.ctx;
        const Rational rhs = Rational(-1, 2) * rp(c.p) * c.h_full[4] -
                             Rational(3) * c.h_full[1] / ppow(in, 2) + c.h_full[3] +
                             Rational(1, 2) * ppow(in, 2) * c.bern_p5;
        return std::pair(c.sum_h22, rhs);
      }));

  cat.push_back(per_prime("C30b", "sum_{k<p} (H(2,4;k) + H(4,2;k)) = 3 B_{p-5}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->sum_h24_h42,
                                             Rational(3) * in.ctx->bern_p5);
                          }));

  cat.push_back(per_prime("C30c", "sum_{k<p} H(2,2,2;k) = -3/2 B_{p-5}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->sum_h222,
                                             Rational(-3, 2) * in.ctx->bern_p5);
                          }));

  cat.push_back(per_prime("C31a", "H(2,3;p-1) = -2 B_{p-5}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->mhs_2_3, Rational(-2) * in.ctx->bern_p5);
                          }));
  cat.push_back(per_prime("C31b", "H(1,4;p-1) = B_{p-5}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->mhs_1_4, in.ctx->bern_p5);
                          }));
  cat.push_back(per_prime("C31c", "H(4,1;p-1) = -B_{p-5}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->mhs_4_1, -in.ctx->bern_p5);
                          }));

  cat.push_back(per_prime("C32", "H(2,2,1;p-1) = 3/2 B_{p-5}  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->mhs_2_2_1,
                                             Rational(3, 2) * in.ctx->bern_p5);
                          }));

  {
    CongruenceCheck c;
    c.id = "C33a";
    c.statement = "C(p-1,k)^2 C(p+k,k)^2 = 1 - 2p^2 H_k^(2) + p^4 H_k^(4) + 4p^4 H(2,2;k)  "
                  "(mod p^5), all k < p";
    c.min_prime = 7;
    c.modulus = fixed_mod(5);
    c.eval_valuation = [](const CheckInputs& in) { return binom_product_valuation(in, false); };
    cat.push_back(std::move(c));
  }
  {
    CongruenceCheck c;
    c.id = "C33b";
    c.statement = "previous expansion refined by -2p^6 (H(2,4;k)+H(4,2;k)) - 8p^6 H(2,2,2;k)  "
                  "(mod p^7), all k < p";
    c.min_prime = 7;
    c.modulus = fixed_mod(7);
    c.eval_valuation = [](const CheckInputs& in) { return binom_product_valuation(in, true); };
    cat.push_back(std::move(c));
  }

  cat.push_back(per_prime("C34a", "H(2,2;(p-1)/2) = 0  (mod p)", 7, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->mhs_2_2_half, Rational(0));
                          }));
  cat.push_back(per_prime("C34b1", "H_{p-1} = 0  (mod p^2)   [Wolstenholme]", 5, 2,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_full[1], Rational(0));
                          }));
  cat.push_back(per_prime("C34b2", "H_{p-1}^(2) = 0  (mod p)   [Wolstenholme]", 5, 1,
                          [](const CheckInputs& in) {
                            return std::pair(in.ctx->h_full[2], Rational(0));
                          }));

  {
    CongruenceCheck c;
    c.id = "C35";
    c.statement = "sum_{k<=(p-1)/2} H_{2k}^(2)/k = sum_{k<p} H_k^(2)/k + H(2,-1;p-1) + 1/4 "
                  "H_{(p-1)/2}^(3) - H_{p-1}^(3)   [exact]";
    c.min_prime = 7;
    c.modulus = exact_mod();
    c.eval = [](const CheckInputs& in) {
      const auto& x = *in.ctx;
      return std::pair(x.sum_h2_even_over_k_half,
                       x.sum_h2_over_k + x.mhs_2_m1 + Rational(1, 4) * x.h_half[3] -
                           x.h_full[3]);
    };
    cat.push_back(std::move(c));
  }

  return cat;
}

const std::vector<std::string>& theorem1_ids() {
  static const std::vector<std::string> v{"C02", "C04", "C05", "C06"};
  return v;
}
const std::vector<std::string>& theorem2_ids() {
  static const std::vector<std::string> v{"C07", "C08", "C09"};
  return v;
}
const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> v{
      "C10", "C11", "C12",  "C13",  "C14",  "C15",  "C16",  "C17",  "C18",
      "C19a", "C19b", "C19c", "C19d", "C24", "C26", "C27", "C28", "C29",
      "C30a", "C30b", "C30c", "C33a", "C33b", "C34a", "C34b1", "C34b2", "C35"};
  return v;
}
const std::vector<std::string>& import_ids() {
  static const std::vector<std::string> v{"C20",  "C21a1", "C21a2", "C21b", "C22",
                                          "C23",  "C25",   "C31a",  "C31b", "C31c",
                                          "C32"};
  return v;
}

}  // namespace

const std::vector<CongruenceCheck>& catalog() {
  static const std::vector<CongruenceCheck> cat = build_catalog();
  return cat;
}

const CongruenceCheck* find_check(const std::string& id) {
  for (const auto& c : catalog()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

std::vector<std::string> suite_checks(const std::string& suite_id) {
  if (suite_id == "all") {
    std::vector<std::string> ids;
    for (const auto& c : catalog()) {
      if (!c.negative_control) ids.push_back(c.id);
    }
    return ids;
  }
  if (suite_id == "theorem1") return theorem1_ids();
  if (suite_id == "theorem2") return theorem2_ids();
  if (suite_id == "lemmas") return lemma_ids();
  if (suite_id == "imports") return import_ids();
  if (suite_id == "identities-as-congruences") return {"C35"};
  throw std::invalid_argument("unknown suite '" + suite_id + "'");
}

bool is_informational_id(const std::string& id) { return id == "C01z"; }

std::string CheckResult::status() const {
  if (!evaluated) return "skip";
  if (negative_control) return pass ? "fail" : "expected-fail";
  return pass ? "pass" : "fail";
}

bool CheckResult::is_failure() const { return status() == "fail" && !informational; }

std::string CheckResult::sort_key() const {
  std::ostringstream os;
  os << id << '\x1f';
  char buf[24];
  std::snprintf(buf, sizeof buf, "%020llu", static_cast<unsigned long long>(p));
  os << buf;
  for (const auto& [k, v] : params) {
    std::snprintf(buf, sizeof buf, "%+021lld", v);
    os << '\x1f' << k << '=' << buf;
  }
  return os.str();
}

}  // namespace apery
