#include "apery/modular.hpp"

#include <stdexcept>

namespace apery {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// this witness set is deterministic for all n < 2^64
constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi && n >= lo; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw std::domain_error("mod_inverse: argument not coprime to modulus");
  }
  return r;
}

int legendre_symbol(const Integer& x, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre_symbol: p must be an odd prime");
  }
  const Integer pz(static_cast<unsigned long>(p));
  Integer r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t());
  if (sgn(r) == 0) return 0;
  Integer e((p - 1) / 2);
  Integer pw;
  mpz_powm(pw.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
  if (pw == 1) return 1;
  if (pw == pz - 1) return -1;
  throw std::logic_error("legendre_symbol: Euler criterion failed (p not prime?)");
}

PrimePowerModulus::PrimePowerModulus(std::uint64_t p_, unsigned k_) : p(p_), k(k_) {
  if (p < 3 || !is_prime(p)) {
    throw std::invalid_argument("PrimePowerModulus: p must be a prime >= 3");
  }
  if (k < 1) throw std::invalid_argument("PrimePowerModulus: exponent must be >= 1");
}

Integer PrimePowerModulus::value() const {
  return int_pow(Integer(static_cast<unsigned long>(p)), k);
}

}  // namespace apery
