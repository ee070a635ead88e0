#pragma once

#include <cstddef>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

// B_0..B_N from the convolution recurrence sum_{k<n} C(n,k) B_k = 0 with B_0 = 1.
// Construction is single-threaded; a completed table is immutable for readers.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index);

  // Adopts externally supplied values (cache loads); validates before accepting.
  static BernoulliTable from_values(std::vector<Rational> values);

  const Rational& at(std::size_t n) const;  // throws std::out_of_range past max_index
  std::size_t max_index() const { return values_.size() - 1; }
  const std::vector<Rational>& values() const { return values_; }

  void extend(std::size_t new_max_index);

  // B_0 = 1, B_1 = -1/2, B_2 = 1/6, odd indices >= 3 vanish,
  // plus five spot rows of the defining recurrence. Throws std::runtime_error.
  void validate() const;

 private:
  BernoulliTable() = default;
  void grow_to(std::size_t n);
  std::vector<Rational> values_;
};

// sum_{k<=n} C(n,k) B_k x^{n-k}; table must reach index n.
Rational bernoulli_poly(unsigned n, const Rational& x, const BernoulliTable& table);

}  // namespace apery
