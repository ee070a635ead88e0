#include <stdexcept>

#include "apery/apery_seq.hpp"
#include "doctest.h"

using namespace apery;

TEST_CASE("small Apery numbers") {
  const long expected[] = {1, 5, 73, 1445, 33001, 819005};
  for (std::uint64_t n = 0; n <= 5; ++n) {
    CHECK_EQ(apery_number(n), expected[n]);
  }
}

TEST_CASE("Apery numbers are positive and strictly increasing to 200") {
  Integer prev(0);
  for (std::uint64_t n = 0; n <= 200; ++n) {
    const Integer a = apery_number(n);
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("Apery polynomial") {
  CHECK_EQ(apery_poly(1, 2), 9);
  CHECK_EQ(apery_poly(3, 0), 1);
  CHECK_EQ(apery_poly(2, -1), Integer(73 - 2 * 36));
  for (std::uint64_t n = 0; n <= 20; ++n) {
    CHECK_EQ(apery_poly(n, 1), apery_number(n));
  }
}

TEST_CASE("Fermat quotients") {
  CHECK_EQ(fermat_quotient_2(3), 1);
  CHECK_EQ(fermat_quotient_2(7), 9);
  CHECK_EQ(fermat_quotient_2(11), 93);
  CHECK_THROWS_AS(fermat_quotient_2(2), std::invalid_argument);
  CHECK_THROWS_AS(fermat_quotient_2(9), std::invalid_argument);
}

TEST_CASE("prefix sums of the odd-weighted series") {
  const AperySums s = AperySums::build(60);
  CHECK_EQ(s.odd1.at(2), 16);    // 1 + 3*5
  CHECK_EQ(s.odd3.at(2), 136);   // 1 + 27*5
  CHECK_EQ(s.odd1.at(0), 0);
  for (std::uint64_t n = 0; n <= 60; n += 7) {
    CHECK_EQ(s.odd1.at(n + 1) - s.odd1.at(n),
             Integer(static_cast<unsigned long>(2 * n + 1)) * s.apery.at(n));
    const Integer w(static_cast<unsigned long>(2 * n + 1));
    CHECK_EQ(s.odd3.at(n + 1) - s.odd3.at(n), w * w * w * s.apery.at(n));
  }
}

TEST_CASE("polynomial prefix sums match direct evaluation") {
  for (long x : {-3L, 0L, 1L, 7L}) {
    const auto prefix = apery_poly_prefix(Integer(x), 25);
    Integer direct(0);
    for (std::uint64_t n = 0; n <= 25; ++n) {
      CHECK_EQ(prefix.at(n), direct);
      direct += Integer(static_cast<unsigned long>(2 * n + 1)) * apery_poly(n, Integer(x));
    }
  }
}
