#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <numeric>
#include <string>

namespace pqv {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Non-negative remainder, for any sign of a.
inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Inverse of a modulo m, or 0 when gcd(a, m) != 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return 0;
  return mod(old_s, m);
}

}  // namespace pqv
