#include "apery/identities.hpp"

#include <stdexcept>

#include "apery/harmonic.hpp"

namespace apery {

namespace {

IdentityReport make_report(std::string id, std::string instance, Rational lhs, Rational rhs) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.instance = std::move(instance);
  r.pass = (lhs == rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

// both closed forms of A_n, evaluated along independent arithmetic routes
IdentityReport apery_forms_impl(std::uint64_t n, bool mutate) {
  // route 1: whole-term recurrence on C(n+k,k)^2 C(n,k)^2
  Integer term(1), form1(1);
  for (std::uint64_t k = 0; k < n; ++k) {
    const unsigned long a = static_cast<unsigned long>((n + k + 1) * (n - k));
    const unsigned long b2 = static_cast<unsigned long>((k + 1) * (k + 1));
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), a);
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), a);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), b2);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), b2);
    form1 += term;
  }
  // route 2: factor-wise recurrences on C(n+k,2k) and C(2k,k)
  Integer form2(0);
  if (mutate) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      const Integer b1 = binomial(static_cast<std::int64_t>(n + k + 1),
                                  static_cast<std::int64_t>(2 * k));
      const Integer b2 = binomial(static_cast<std::int64_t>(2 * k),
                                  static_cast<std::int64_t>(k));
      form2 += b1 * b1 * b2 * b2;
    }
  } else {
    Integer b1(1), b2(1);
    for (std::uint64_t k = 0; k <= n; ++k) {
      const Integer t = b1 * b2;
      form2 += t * t;
      if (k < n) {
        mpz_mul_ui(b1.get_mpz_t(), b1.get_mpz_t(),
                   static_cast<unsigned long>((n + k + 1) * (n - k)));
        mpz_divexact_ui(b1.get_mpz_t(), b1.get_mpz_t(),
                        static_cast<unsigned long>((2 * k + 1) * (2 * k + 2)));
        mpz_mul_ui(b2.get_mpz_t(), b2.get_mpz_t(),
                   static_cast<unsigned long>((2 * k + 1) * (2 * k + 2)));
        mpz_divexact_ui(b2.get_mpz_t(), b2.get_mpz_t(),
                        static_cast<unsigned long>((k + 1) * (k + 1)));
      }
    }
  }
  return make_report("apery-forms", "n=" + std::to_string(n), Rational(form1), Rational(form2));
}

// lhs of the odd/cubic binomial sums: sum_{m<n} (2m+1)^w C(m+k,2k)^2, w in {1,3}
Integer weighted_square_sum(std::uint64_t n, std::uint64_t k, unsigned weight_pow) {
  Integer acc(0);
  if (k >= n) return acc;  // C(m+k,2k) = 0 for every m < n
  Integer c(1);            // C(m+k,2k) at m = k
  for (std::uint64_t m = k; m < n; ++m) {
    Integer w(static_cast<unsigned long>(2 * m + 1));
    if (weight_pow == 3) w = w * w * w;
    acc += w * c * c;
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m + k + 1));
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(m + 1 - k));
  }
  return acc;
}

IdentityReport odd_binomial_impl(std::uint64_t n, std::uint64_t k, bool mutate) {
  if (n < 1) throw std::invalid_argument("check_odd_binomial_sum: n must be >= 1");
  const Rational lhs(weighted_square_sum(n, k, 1));
  const Integer c = binomial(static_cast<std::int64_t>(n + k), static_cast<std::int64_t>(2 * k));
  const Integer nk = Integer(static_cast<long>(n) - static_cast<long>(k));
  const unsigned long denom = static_cast<unsigned long>(2 * k + (mutate ? 2 : 1));
  const Rational rhs = Rational(nk * nk * c * c, Integer(denom));
  return make_report("odd-binomial-sum", "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                     lhs, rhs);
}

IdentityReport cubic_binomial_impl(std::uint64_t n, std::uint64_t k, bool mutate) {
  if (n < 1) throw std::invalid_argument("check_cubic_binomial_sum: n must be >= 1");
  const Rational lhs(weighted_square_sum(n, k, 3));
  const Integer c = binomial(static_cast<std::int64_t>(n + k), static_cast<std::int64_t>(2 * k));
  const Integer nk = Integer(static_cast<long>(n) - static_cast<long>(k));
  const Integer scale = Integer(2) * Integer(static_cast<unsigned long>(n * n)) -
                        Integer(static_cast<unsigned long>(k)) - 1;
  const unsigned long denom = static_cast<unsigned long>(k + (mutate ? 2 : 1));
  const Rational rhs = Rational(nk * nk * scale * c * c, Integer(denom));
  return make_report("cubic-binomial-sum", "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                     lhs, rhs);
}

IdentityReport bernoulli_half_impl(unsigned n, const BernoulliTable& table, bool mutate) {
  const Rational lhs = bernoulli_poly(n, Rational(1, 2), table);
  const long e = (mutate ? 2L : 1L) - static_cast<long>(n);
  const Rational rhs = (Rational(2).pow(e) - Rational(1)) * table.at(n);
  return make_report("bernoulli-half", "n=" + std::to_string(n), lhs, rhs);
}

IdentityReport alternating_impl(std::uint64_t q, bool mutate) {
  if (q < 3 || (q & 1) == 0) {
    throw std::invalid_argument("check_alternating_binomial_sum: q must be odd and >= 3");
  }
  Rational lhs(0);
  Integer u(1);  // C(q-1,k) C(q+k,k)
  for (std::uint64_t k = 1; k <= q - 1; ++k) {
    mpz_mul_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>((q - k) * (q + k)));
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), static_cast<unsigned long>(k * k));
    const Rational term(u, Integer(static_cast<unsigned long>(k)));
    if (k & 1) {
      lhs -= term;
    } else {
      lhs += term;
    }
  }
  const Rational rhs = Rational(mutate ? -3 : -2) * harmonic(q - 1, 1);
  return make_report("alternating-binomial-sum", "q=" + std::to_string(q), lhs, rhs);
}

IdentityReport power_sum_impl(std::uint64_t n, unsigned m, const BernoulliTable& table,
                              bool mutate) {
  if (n < 2) throw std::invalid_argument("check_power_sum: n must be >= 2");
  if (m < 1) throw std::invalid_argument("check_power_sum: m must be >= 1");
  Integer acc(0);
  for (std::uint64_t k = 1; k < n; ++k) {
    acc += int_pow(Integer(static_cast<unsigned long>(k)), m - 1);
  }
  // subtrahend is B_m(1), which equals B_m everywhere except m = 1
  const Rational rhs =
      (bernoulli_poly(m, Rational(Integer(static_cast<unsigned long>(n))), table) -
       bernoulli_poly(m, Rational(1), table)) /
      Rational(static_cast<unsigned long>(m + (mutate ? 1 : 0)));
  return make_report("power-sum", "n=" + std::to_string(n) + ",m=" + std::to_string(m),
                     Rational(acc), rhs);
}

}  // namespace

IdentityReport check_apery_forms(std::uint64_t n) { return apery_forms_impl(n, false); }
IdentityReport check_odd_binomial_sum(std::uint64_t n, std::uint64_t k) {
  return odd_binomial_impl(n, k, false);
}
IdentityReport check_cubic_binomial_sum(std::uint64_t n, std::uint64_t k) {
  return cubic_binomial_impl(n, k, false);
}
IdentityReport check_bernoulli_half(unsigned n, const BernoulliTable& table) {
  return bernoulli_half_impl(n, table, false);
}
IdentityReport check_alternating_binomial_sum(std::uint64_t q) {
  return alternating_impl(q, false);
}
IdentityReport check_power_sum(std::uint64_t n, unsigned m, const BernoulliTable& table) {
  return power_sum_impl(n, m, table, false);
}

namespace mutated {
IdentityReport check_apery_forms(std::uint64_t n) { return apery_forms_impl(n, true); }
IdentityReport check_odd_binomial_sum(std::uint64_t n, std::uint64_t k) {
  return odd_binomial_impl(n, k, true);
}
IdentityReport check_cubic_binomial_sum(std::uint64_t n, std::uint64_t k) {
  return cubic_binomial_impl(n, k, true);
}
IdentityReport check_bernoulli_half(unsigned n, const BernoulliTable& table) {
  return bernoulli_half_impl(n, table, true);
}
IdentityReport check_alternating_binomial_sum(std::uint64_t q) {
  return alternating_impl(q, true);
}
IdentityReport check_power_sum(std::uint64_t n, unsigned m, const BernoulliTable& table) {
  return power_sum_impl(n, m, table, true);
}
}  // namespace mutated

}  // namespace apery
