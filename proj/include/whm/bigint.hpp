#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace whm {

using BigInt = mpz_class;
/// Canonical rational (gcd 1, positive denominator) backed by GMP.
using Rational = mpq_class;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Largest k >= 0 with q^k <= x, for x >= 1. Returns 0 for x < 1.
template <class Number>
std::uint64_t floor_log(std::uint64_t q, const Number& x) {
  std::uint64_t k = 0;
  BigInt p = q;
  while (p <= x) {
    ++k;
    p *= q;
  }
  return k;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace whm
