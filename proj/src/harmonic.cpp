#include "apery/harmonic.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace apery {

Rational harmonic(std::uint64_t n, unsigned order) {
  if (order < 1) throw std::invalid_argument("harmonic: order must be >= 1");
  Rational acc(0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    acc += Rational(Integer(1), int_pow(Integer(static_cast<unsigned long>(k)), order));
  }
  return acc;
}

MhsIndex::MhsIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("MhsIndex: empty index vector");
  for (int e : entries_) {
    if (e == 0) throw std::invalid_argument("MhsIndex: zero entry");
  }
}

MhsIndex::MhsIndex(std::initializer_list<int> entries)
    : MhsIndex(std::vector<int>(entries)) {}

MhsIndex MhsIndex::parse(const std::string& text) {
  std::vector<int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("MhsIndex: bad entry '" + item + "'");
    entries.push_back(v);
  }
  return MhsIndex(std::move(entries));
}

std::string MhsIndex::str() const {
  std::string s;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s;
}

MhsStream::MhsStream(MhsIndex s) : s_(std::move(s)), state_(s_.depth() + 1, Rational(0)) {
  state_[0] = Rational(1);
}

void MhsStream::advance() {
  ++n_;
  const bool odd = (n_ & 1) != 0;
  for (std::size_t r = s_.depth(); r >= 1; --r) {
    if (state_[r - 1].is_zero()) continue;
    const int e = s_.entries()[r - 1];
    const unsigned mag = static_cast<unsigned>(e < 0 ? -e : e);
    Rational term = state_[r - 1] / Rational(int_pow(Integer(static_cast<unsigned long>(n_)), mag));
    if (e < 0 && odd) {
      state_[r] -= term;
    } else {
      state_[r] += term;
    }
  }
}

void MhsStream::push_to(std::uint64_t n) {
  while (n_ < n) advance();
}

Rational mhs(const MhsIndex& s, std::uint64_t n) {
  MhsStream stream(s);
  stream.push_to(n);
  return stream.value();
}

}  // namespace apery
