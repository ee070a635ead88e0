#include "apery/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "apery/modular.hpp"

namespace apery {

Integer int_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: negative upper index");
  if (k < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer r(1);
  for (std::int64_t i = 1; i <= k; ++i) {
    mpz_mul_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n - k + i));
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

Integer div_exact_checked(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw std::domain_error("div_exact_checked: division by zero");
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("div_exact_checked: remainder is nonzero");
  return q;
}

Rational::Rational(Integer num, Integer den) {
  if (sgn(den) == 0) throw std::domain_error("Rational: zero denominator");
  v_.get_num() = std::move(num);
  v_.get_den() = std::move(den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.v_.get_mpq_t(), v_.get_mpq_t());
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  const Rational base = e < 0 ? inverse() : *this;
  const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  return Rational(int_pow(base.num(), a), int_pow(base.den(), a));
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::string Rational::fraction_str() const { return num().get_str() + "/" + den().get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

long Valuation::value() const {
  if (infinite_) throw std::logic_error("Valuation: value() of +infinity");
  return v_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : std::to_string(v_); }

namespace {

long remove_factor(const Integer& n, const Integer& p) {
  Integer reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Valuation padic_valuation(const Rational& q, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p is not prime");
  if (q.is_zero()) return Valuation::infinity();
  const Integer pz(static_cast<unsigned long>(p));
  return Valuation::of(remove_factor(q.num(), pz) - remove_factor(q.den(), pz));
}

Valuation padic_valuation(const Integer& n, std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("padic_valuation: p is not prime");
  if (sgn(n) == 0) return Valuation::infinity();
  return Valuation::of(remove_factor(n, Integer(static_cast<unsigned long>(p))));
}

bool rat_congruent(const Rational& a, const Rational& b, std::uint64_t p, unsigned k) {
  if (k < 1) throw std::invalid_argument("rat_congruent: exponent must be >= 1");
  return padic_valuation(a - b, p).at_least(static_cast<long>(k));
}

}  // namespace apery
