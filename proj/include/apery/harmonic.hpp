#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apery/rational.hpp"

namespace apery {

// H_n^{(m)} = sum_{k=1..n} 1/k^m; H_0^{(m)} = 0. m >= 1.
Rational harmonic(std::uint64_t n, unsigned order);

// Index vector s = (s_1,...,s_d) of an alternating multiple harmonic sum.
// Entries are nonzero; negative entries carry an alternating sign.
class MhsIndex {
 public:
  explicit MhsIndex(std::vector<int> entries);
  MhsIndex(std::initializer_list<int> entries);
  const std::vector<int>& entries() const { return entries_; }
  std::size_t depth() const { return entries_.size(); }
  static MhsIndex parse(const std::string& text);  // "2,-1"
  std::string str() const;

 private:
  std::vector<int> entries_;
};

// H(s;n) = sum over 1 <= k_1 < ... < k_d <= n of prod_i sgn(s_i)^{k_i} / k_i^{|s_i|}.
// Prefix dynamic programming, O(d*n) rational operations; 0 when n < depth.
Rational mhs(const MhsIndex& s, std::uint64_t n);

// Streaming form of the same DP: after push_to(n), value() == mhs(s, n).
class MhsStream {
 public:
  explicit MhsStream(MhsIndex s);
  void advance();  // n -> n+1
  void push_to(std::uint64_t n);
  std::uint64_t n() const { return n_; }
  const Rational& value() const { return state_.back(); }

 private:
  MhsIndex s_;
  std::vector<Rational> state_;  // state_[r] = sum over the first r index entries
  std::uint64_t n_ = 0;
};

}  // namespace apery
