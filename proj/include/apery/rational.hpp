#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace apery {

using Integer = mpz_class;

// base^exp, exp >= 0
Integer int_pow(const Integer& base, unsigned long exp);

// C(n,k) by the running-product formula; 0 outside 0 <= k <= n.
Integer binomial(std::int64_t n, std::int64_t k);

// quotient a/b that must leave no remainder; throws std::logic_error otherwise
Integer div_exact_checked(const Integer& a, const Integer& b);

// Arbitrary-precision rational, always stored reduced with denominator > 0.
// Zero is 0/1. All operations are pure; values are freely shareable across threads.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(const Integer& n) : v_(n) {}
  Rational(Integer num, Integer den);

  // "num/den" or a bare integer
  static Rational parse(const std::string& text);

  Integer num() const { return Integer(mpq_numref(v_.get_mpq_t())); }
  Integer den() const { return Integer(mpq_denref(v_.get_mpq_t())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_.get_mpq_t()), 1) == 0; }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) {
    a += b;
    return a;
  }
  friend Rational operator-(Rational a, const Rational& b) {
    a -= b;
    return a;
  }
  friend Rational operator*(Rational a, const Rational& b) {
    a *= b;
    return a;
  }
  friend Rational operator/(Rational a, const Rational& b) {
    a /= b;
    return a;
  }
  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  Rational inverse() const;
  // q^e; negative e inverts first (throws std::domain_error on zero)
  Rational pow(long e) const;

  std::string str() const;           // "7/2"; integers print without the "/1"
  std::string fraction_str() const;  // always "num/den"

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Result of a p-adic valuation: a finite integer or +infinity (the valuation of 0).
class Valuation {
 public:
  static Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }
  static Valuation of(long v) {
    Valuation x;
    x.v_ = v;
    return x;
  }
  bool is_infinite() const { return infinite_; }
  long value() const;  // throws std::logic_error when infinite
  bool at_least(long k) const { return infinite_ || v_ >= k; }
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  std::string str() const;  // "inf" or decimal

 private:
  bool infinite_ = false;
  long v_ = 0;
};

// v_p(q) = v_p(num) - v_p(den); +infinity when q == 0. p must be prime.
Valuation padic_valuation(const Rational& q, std::uint64_t p);
Valuation padic_valuation(const Integer& n, std::uint64_t p);

// a == b (mod p^k) in the sense v_p(a-b) >= k.
// Either side may have negative valuation; only the difference matters.
bool rat_congruent(const Rational& a, const Rational& b, std::uint64_t p, unsigned k);

}  // namespace apery
