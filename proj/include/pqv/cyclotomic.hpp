#pragma once

#include <string>
#include <vector>

#include "pqv/rational.hpp"

namespace pqv {

/// Exact element of the cyclotomic field Q(zeta_N), stored as a polynomial
/// in zeta_N with rational coefficients reduced modulo zeta_N^N - 1.
///
/// The representation is not unique (the relation Phi_N(zeta) = 0 is only
/// applied when testing for zero), so equality goes through is_zero().
/// Operands of different conductor are lifted to the lcm.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor);
  Cyclotomic(const Rational& q);  // NOLINT: rationals embed implicitly
  Cyclotomic(std::int64_t q) : Cyclotomic(make_rational(q)) {}  // NOLINT

  /// coeff * zeta_N^e
  static Cyclotomic zeta(int conductor, std::int64_t exponent, const Rational& coeff = 1);

  int conductor() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Same element written over zeta_L, L a multiple of the conductor.
  Cyclotomic lifted(int new_conductor) const;

  bool is_zero() const;
  /// The element reduced modulo the N-th cyclotomic polynomial; unique per
  /// element for a fixed conductor.
  std::vector<Rational> normal_form() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator/=(const Cyclotomic& other);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return (a - b).is_zero(); }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t e) const;

  /// Human-readable form such as "1/2*z(8)^3 - z(8)^5".
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

/// Coefficients (low degree first) of the N-th cyclotomic polynomial.
const std::vector<BigInt>& cyclotomic_polynomial(int n);

/// Parses literals written as sums of "q", "q*z(N)^e", "z(N)^e*z(M)^f", ...
/// Throws UsageError on malformed input.
Cyclotomic parse_cyclotomic(const std::string& text);

}  // namespace pqv
