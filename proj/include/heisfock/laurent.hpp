#pragma once

#include <map>
#include <string>

#include "heisfock/rational.hpp"

namespace heisfock {

/// Finite sum of c * v^e with exact rational exponents and coefficients.
class LaurentScalar {
 public:
  LaurentScalar() = default;
  LaurentScalar(long coeff);  // NOLINT: implicit constant embedding
  LaurentScalar(const Rational& coeff);  // NOLINT

  static LaurentScalar monomial(const Rational& exponent, const Rational& coeff = 1);

  const std::map<Rational, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Rational coefficient(const Rational& exponent) const;
  /// Lowest exponent; throws InvalidInput on zero.
  Rational min_exponent() const;

  void add_term(const Rational& exponent, const Rational& coeff);
  /// *this += scale * other.
  void add_scaled(const LaurentScalar& other, const Rational& scale);

  /// Multiplication by v^shift.
  LaurentScalar shifted(const Rational& shift) const;

  /// Formal substitution v^period -> 1: exponents are reduced into [0, period).
  LaurentScalar reduce_exponents(const Rational& period) const;

  /// Sum of coefficients (the value at v = 1).
  Rational at_one() const;

  /// True iff every exponent has denominator dividing `denominator`.
  bool exponents_divisible_by(long denominator) const;

  LaurentScalar& operator+=(const LaurentScalar& other);
  LaurentScalar& operator-=(const LaurentScalar& other);
  LaurentScalar& operator*=(const LaurentScalar& other);
  LaurentScalar operator-() const;
  friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
  friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
  friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
  friend bool operator==(const LaurentScalar&, const LaurentScalar&) = default;

  std::string to_string() const;

 private:
  std::map<Rational, Rational> terms_;
};

}  // namespace heisfock
