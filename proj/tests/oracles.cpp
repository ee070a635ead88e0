#include "oracles.hpp"

#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace apery::oracle {

std::vector<Rational> akiyama_tanigawa(std::size_t n_max) {
  std::vector<Rational> a(n_max + 1), b(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    a[m] = Rational(Integer(1), Integer(static_cast<unsigned long>(m + 1)));
    for (std::size_t j = m; j >= 1; --j) {
      a[j - 1] = Rational(static_cast<unsigned long>(j)) * (a[j - 1] - a[j]);
    }
    b[m] = a[0];
  }
  if (n_max >= 1) b[1] = -b[1];  // the transform yields B_1 = +1/2
  return b;
}

std::vector<Rational> mhs_by_enumeration(const MhsIndex& s, std::uint64_t n_max) {
  std::vector<Rational> bucket(n_max + 1);
  const auto& e = s.entries();
  const std::size_t d = e.size();
  std::function<void(std::size_t, std::uint64_t, const Rational&)> rec =
      [&](std::size_t level, std::uint64_t start, const Rational& partial) {
        for (std::uint64_t k = start; k <= n_max; ++k) {
          const int ent = e[level];
          const unsigned mag = static_cast<unsigned>(std::abs(ent));
          Rational term =
              partial / Rational(int_pow(Integer(static_cast<unsigned long>(k)), mag));
          if (ent < 0 && (k & 1)) term = -term;
          if (level + 1 == d) {
            bucket[k] += term;
          } else {
            rec(level + 1, k + 1, term);
          }
        }
      };
  rec(0, 1, Rational(1));
  std::vector<Rational> out(n_max + 1);
  Rational acc(0);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    acc += bucket[n];
    out[n] = acc;
  }
  return out;
}

Rational mhs_nested_loops(const MhsIndex& s, std::uint64_t n) {
  const auto& e = s.entries();
  const auto weight = [&e](std::size_t i, std::uint64_t k) {
    const unsigned mag = static_cast<unsigned>(std::abs(e[i]));
    Rational t(Integer(1), int_pow(Integer(static_cast<unsigned long>(k)), mag));
    if (e[i] < 0 && (k & 1)) t = -t;
    return t;
  };
  Rational acc(0);
  switch (e.size()) {
    case 1:
      for (std::uint64_t k = 1; k <= n; ++k) acc += weight(0, k);
      break;
    case 2:
      for (std::uint64_t k1 = 1; k1 <= n; ++k1)
        for (std::uint64_t k2 = k1 + 1; k2 <= n; ++k2) acc += weight(0, k1) * weight(1, k2);
      break;
    case 3:
      for (std::uint64_t k1 = 1; k1 <= n; ++k1)
        for (std::uint64_t k2 = k1 + 1; k2 <= n; ++k2)
          for (std::uint64_t k3 = k2 + 1; k3 <= n; ++k3)
            acc += weight(0, k1) * weight(1, k2) * weight(2, k3);
      break;
    default:
      throw std::invalid_argument("mhs_nested_loops: depth must be <= 3");
  }
  return acc;
}

std::vector<std::vector<Integer>> pascal_triangle(std::size_t n_max) {
  std::vector<std::vector<Integer>> rows(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows[n].assign(n + 1, Integer(1));
    for (std::size_t k = 1; k < n; ++k) {
      rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
  }
  return rows;
}

std::set<std::uint64_t> squares_mod(std::uint64_t p) {
  std::set<std::uint64_t> s;
  for (std::uint64_t x = 1; x < p; ++x) s.insert(x * x % p);
  return s;
}

}  // namespace apery::oracle
