#include "apery/apery_seq.hpp"

#include <stdexcept>

#include "apery/modular.hpp"

namespace apery {

namespace {

// term_{k+1} = term_k * ((n+k+1)(n-k))^2 * x / (k+1)^4, starting from term_0 = 1.
// The binomial part of every step divides exactly.
Integer poly_sum(std::uint64_t n, const Integer* x) {
  Integer term(1);
  Integer acc(1);
  for (std::uint64_t k = 0; k < n; ++k) {
    const unsigned long a = static_cast<unsigned long>((n + k + 1) * (n - k));
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), a);
    mpz_mul_ui(term.get_mpz_t(), term.get_mpz_t(), a);
    if (x != nullptr) term *= *x;
    const unsigned long b2 = static_cast<unsigned long>((k + 1) * (k + 1));
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), b2);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), b2);
    if (sgn(term) == 0) break;  // x == 0
    acc += term;
  }
  return acc;
}

}  // namespace

Integer apery_number(std::uint64_t n) { return poly_sum(n, nullptr); }

Integer apery_poly(std::uint64_t n, const Integer& x) {
  if (x == 1) return apery_number(n);
  return poly_sum(n, &x);
}

Integer fermat_quotient_2(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("fermat_quotient_2: p must be an odd prime");
  }
  Integer m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, static_cast<unsigned long>(p - 1));
  m -= 1;
  // exact by Fermat's little theorem; a remainder would mean p is composite
  return div_exact_checked(m, Integer(static_cast<unsigned long>(p)));
}

AperySums AperySums::build(std::uint64_t n_max) {
  AperySums s;
  s.apery.reserve(n_max + 1);
  s.odd1.assign(n_max + 2, Integer(0));
  s.odd3.assign(n_max + 2, Integer(0));
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    s.apery.push_back(apery_number(n));
    const Integer w(static_cast<unsigned long>(2 * n + 1));
    s.odd1[n + 1] = s.odd1[n] + w * s.apery[n];
    s.odd3[n + 1] = s.odd3[n] + w * w * w * s.apery[n];
  }
  return s;
}

std::vector<Integer> apery_poly_prefix(const Integer& x, std::uint64_t n_max) {
  std::vector<Integer> v(n_max + 2, Integer(0));
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    v[n + 1] = v[n] + Integer(static_cast<unsigned long>(2 * n + 1)) * apery_poly(n, x);
  }
  return v;
}

}  // namespace apery
