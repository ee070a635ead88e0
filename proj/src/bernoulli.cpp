#include "apery/bernoulli.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace apery {

BernoulliTable::BernoulliTable(std::size_t max_index) { grow_to(max_index); }

void BernoulliTable::grow_to(std::size_t max_index) {
  if (values_.empty()) values_.emplace_back(1);
  for (std::size_t n = values_.size(); n <= max_index; ++n) {
    // solve row n+1 of sum_{k<=n} C(n+1,k) B_k = 0 for B_n
    Rational acc(0);
    Integer c(1);  // C(n+1, k), starting at k = 0
    for (std::size_t k = 0; k < n; ++k) {
      if (!values_[k].is_zero()) acc += Rational(c) * values_[k];
      mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1 - k));
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    values_.push_back(-acc / Rational(c));  // c = C(n+1,n) = n+1
  }
}

void BernoulliTable::extend(std::size_t new_max_index) { grow_to(new_max_index); }

BernoulliTable BernoulliTable::from_values(std::vector<Rational> values) {
  if (values.empty()) throw std::runtime_error("BernoulliTable: empty value list");
  BernoulliTable t;
  t.values_ = std::move(values);
  t.validate();
  return t;
}

const Rational& BernoulliTable::at(std::size_t n) const {
  if (n >= values_.size()) throw std::out_of_range("BernoulliTable: index past max_index");
  return values_[n];
}

void BernoulliTable::validate() const {
  if (values_.empty() || values_[0] != Rational(1)) {
    throw std::runtime_error("BernoulliTable: B_0 != 1");
  }
  if (values_.size() > 1 && values_[1] != Rational(-1, 2)) {
    throw std::runtime_error("BernoulliTable: B_1 != -1/2");
  }
  if (values_.size() > 2 && values_[2] != Rational(1, 6)) {
    throw std::runtime_error("BernoulliTable: B_2 != 1/6");
  }
  for (std::size_t n = 3; n < values_.size(); n += 2) {
    if (!values_[n].is_zero()) {
      throw std::runtime_error("BernoulliTable: odd-index entry is nonzero");
    }
  }
  // row top+1 is included so every entry, including the last, is constrained
  const std::size_t top = max_index();
  std::set<std::size_t> rows;
  for (std::size_t n : {top + 1, top, top / 2, std::size_t(3), std::size_t(2)}) {
    if (n >= 2 && n <= top + 1) rows.insert(n);
  }
  for (std::size_t n : rows) {
    Rational acc(0);
    Integer c(1);
    for (std::size_t k = 0; k < n; ++k) {
      if (!values_[k].is_zero()) acc += Rational(c) * values_[k];
      mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n - k));
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    if (!acc.is_zero()) {
      throw std::runtime_error("BernoulliTable: recurrence row violated at n=" +
                               std::to_string(n));
    }
  }
}

Rational bernoulli_poly(unsigned n, const Rational& x, const BernoulliTable& table) {
  if (table.max_index() < n) throw std::out_of_range("bernoulli_poly: table too short");
  // sum_j C(n,j) B_{n-j} x^j, ascending powers so x = 0 needs no special case
  Rational acc(0);
  Rational xpow(1);
  Integer c(1);
  for (unsigned j = 0; j <= n; ++j) {
    const Rational& b = table.at(n - j);
    if (!b.is_zero()) acc += Rational(c) * b * xpow;
    if (j < n) {
      xpow *= x;
      mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), n - j);
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), j + 1);
    }
  }
  return acc;
}

}  // namespace apery
