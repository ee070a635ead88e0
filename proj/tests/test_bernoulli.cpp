#include <stdexcept>

#include "apery/bernoulli.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace apery;

TEST_CASE("first Bernoulli numbers") {
  const BernoulliTable t(12);
  const char* expected[] = {"1",  "-1/2", "1/6",  "0", "-1/30", "0",       "1/42",
                            "0",  "-1/30", "0",   "5/66", "0",  "-691/2730"};
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK_EQ(t.at(n).str(), expected[n]);
  }
  CHECK_THROWS_AS(t.at(13), std::out_of_range);
}

TEST_CASE("recurrence agrees with the Akiyama-Tanigawa oracle") {
  const BernoulliTable t(80);
  const auto oracle = oracle::akiyama_tanigawa(80);
  for (std::size_t n = 0; n <= 80; ++n) {
    CHECK_EQ(t.at(n), oracle[n]);
  }
}

TEST_CASE("table invariants hold to index 201") {
  const BernoulliTable t(201);
  t.validate();
  for (std::size_t n = 3; n <= 201; n += 2) {
    CHECK(t.at(n).is_zero());
  }
  // every defining convolution row, not just the validation spot checks
  for (std::size_t n = 2; n <= 100; ++n) {
    Rational acc(0);
    for (std::size_t k = 0; k < n; ++k) {
      acc += Rational(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k))) *
             t.at(k);
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("from_values rejects tampering") {
  const BernoulliTable t(20);
  auto values = t.values();
  CHECK_NOTHROW(BernoulliTable::from_values(values));

  auto bad_odd = values;
  bad_odd[3] = Rational(1);
  CHECK_THROWS_AS(BernoulliTable::from_values(bad_odd), std::runtime_error);

  auto bad_even = values;
  bad_even[20] = bad_even[20] + Rational(1, 7);
  CHECK_THROWS_AS(BernoulliTable::from_values(bad_even), std::runtime_error);

  auto bad_b0 = values;
  bad_b0[0] = Rational(0);
  CHECK_THROWS_AS(BernoulliTable::from_values(bad_b0), std::runtime_error);
}

TEST_CASE("extension is consistent with a fresh build") {
  BernoulliTable grown(10);
  grown.extend(40);
  const BernoulliTable fresh(40);
  CHECK_EQ(grown.max_index(), 40);
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK_EQ(grown.at(n), fresh.at(n));
  }
}

TEST_CASE("Bernoulli polynomial values") {
  const BernoulliTable t(12);
  for (unsigned n = 0; n <= 10; ++n) {
    CHECK_EQ(bernoulli_poly(n, Rational(0), t), t.at(n));  // B_n(0) = B_n
  }
  CHECK_EQ(bernoulli_poly(1, Rational(1, 2), t), Rational(0));
  CHECK_EQ(bernoulli_poly(2, Rational(1, 2), t), Rational(-1, 12));
  CHECK_THROWS_AS(bernoulli_poly(13, Rational(0), t), std::out_of_range);
}

TEST_CASE("power sums through Bernoulli polynomials") {
  const BernoulliTable t(12);
  CHECK_EQ((bernoulli_poly(2, Rational(4), t) - t.at(2)) / Rational(2), Rational(6));
  // the subtrahend is B_m(1); it differs from B_m only at m = 1
  for (unsigned m = 1; m <= 12; ++m) {
    CHECK_EQ(bernoulli_poly(m, Rational(1), t), m == 1 ? Rational(1, 2) : t.at(m));
    for (std::uint64_t n = 2; n <= 50; n += 3) {
      Integer direct(0);
      for (std::uint64_t k = 1; k < n; ++k) {
        direct += int_pow(Integer(static_cast<unsigned long>(k)), m - 1);
      }
      const Rational via_poly =
          (bernoulli_poly(m, Rational(Integer(static_cast<unsigned long>(n))), t) -
           bernoulli_poly(m, Rational(1), t)) /
          Rational(static_cast<unsigned long>(m));
      CHECK_EQ(via_poly, Rational(direct));
    }
  }
}
