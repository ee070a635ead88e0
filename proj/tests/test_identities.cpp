#include <random>
#include <stdexcept>

#include "apery/identities.hpp"
#include "doctest.h"

using namespace apery;

TEST_CASE("Apery closed forms") {
  CHECK(check_apery_forms(0).pass);
  const auto r2 = check_apery_forms(2);
  CHECK(r2.pass);
  CHECK_EQ(r2.lhs, Rational(73));
  CHECK(check_apery_forms(5).pass);
}

TEST_CASE("odd-weighted binomial square sum") {
  const auto r = check_odd_binomial_sum(3, 1);
  CHECK(r.pass);
  CHECK_EQ(r.lhs, Rational(48));
  CHECK(check_odd_binomial_sum(1, 0).pass);
  const auto vanish = check_odd_binomial_sum(5, 7);  // out-of-range binomials, both sides 0
  CHECK(vanish.pass);
  CHECK(vanish.lhs.is_zero());
  CHECK_THROWS_AS(check_odd_binomial_sum(0, 1), std::invalid_argument);
}

TEST_CASE("cubic-weighted binomial square sum") {
  const auto r = check_cubic_binomial_sum(2, 0);
  CHECK(r.pass);
  CHECK_EQ(r.lhs, Rational(28));
  CHECK(check_cubic_binomial_sum(1, 0).pass);
  CHECK(check_cubic_binomial_sum(4, 2).pass);
  CHECK(check_cubic_binomial_sum(5, 9).pass);
}

TEST_CASE("Bernoulli polynomial at one half") {
  const BernoulliTable table(40);
  CHECK(check_bernoulli_half(1, table).pass);
  const auto r = check_bernoulli_half(2, table);
  CHECK(r.pass);
  CHECK_EQ(r.lhs, Rational(-1, 12));
  CHECK(check_bernoulli_half(6, table).pass);
  CHECK(check_bernoulli_half(0, table).pass);
}

TEST_CASE("alternating binomial-harmonic identity") {
  const auto r = check_alternating_binomial_sum(3);
  CHECK(r.pass);
  CHECK_EQ(r.lhs, Rational(-3));  // -8 + 5
  CHECK(check_alternating_binomial_sum(5).pass);
  CHECK(check_alternating_binomial_sum(9).pass);  // composite odd q
  CHECK_THROWS_AS(check_alternating_binomial_sum(4), std::invalid_argument);
  CHECK_THROWS_AS(check_alternating_binomial_sum(1), std::invalid_argument);
}

TEST_CASE("power sum identity") {
  const BernoulliTable table(12);
  const auto r = check_power_sum(4, 2, table);
  CHECK(r.pass);
  CHECK_EQ(r.lhs, Rational(6));
  CHECK(check_power_sum(2, 1, table).pass);
  CHECK(check_power_sum(10, 5, table).pass);
  CHECK_THROWS_AS(check_power_sum(1, 2, table), std::invalid_argument);
}

TEST_CASE("randomized instances, all five families") {
  const BernoulliTable table(64);
  std::mt19937_64 rng(913);
  for (int t = 0; t < 120; ++t) {
    const auto n200 = std::uniform_int_distribution<std::uint64_t>(1, 200)(rng);
    const auto k = std::uniform_int_distribution<std::uint64_t>(0, n200 + 5)(rng);
    CHECK(check_odd_binomial_sum(n200, k).pass);
    CHECK(check_cubic_binomial_sum(n200, k).pass);
    CHECK(check_apery_forms(std::uniform_int_distribution<std::uint64_t>(0, 300)(rng)).pass);
    CHECK(check_bernoulli_half(std::uniform_int_distribution<unsigned>(0, 40)(rng), table).pass);
    CHECK(check_alternating_binomial_sum(
              2 * std::uniform_int_distribution<std::uint64_t>(1, 100)(rng) + 1)
              .pass);
    CHECK(check_power_sum(std::uniform_int_distribution<std::uint64_t>(2, 50)(rng),
                          std::uniform_int_distribution<unsigned>(1, 12)(rng), table)
              .pass);
  }
}

TEST_CASE("every mutated checker fails on a small instance") {
  const BernoulliTable table(40);
  const auto find_failure = [](auto&& fn) {
    for (std::uint64_t i = 0; i < 12; ++i) {
      if (!fn(i).pass) return true;
    }
    return false;
  };
  CHECK(find_failure([](std::uint64_t i) { return mutated::check_apery_forms(i + 1); }));
  CHECK(find_failure(
      [](std::uint64_t i) { return mutated::check_odd_binomial_sum(i + 1, i % 3); }));
  CHECK(find_failure(
      [](std::uint64_t i) { return mutated::check_cubic_binomial_sum(i + 1, i % 3); }));
  CHECK(find_failure([&table](std::uint64_t i) {
    return mutated::check_bernoulli_half(static_cast<unsigned>(i + 1), table);
  }));
  CHECK(find_failure(
      [](std::uint64_t i) { return mutated::check_alternating_binomial_sum(2 * (i % 5) + 3); }));
  CHECK(find_failure([&table](std::uint64_t i) {
    return mutated::check_power_sum(i % 8 + 2, static_cast<unsigned>(i % 5 + 1), table);
  }));
  // and the unmutated counterparts pass on the same instances
  for (std::uint64_t i = 1; i <= 10; ++i) {
    CHECK(check_odd_binomial_sum(i, i % 3).pass);
    CHECK(check_cubic_binomial_sum(i, i % 3).pass);
  }
}
