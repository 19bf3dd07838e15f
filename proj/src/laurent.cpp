#include "heisfock/laurent.hpp"

#include "heisfock/errors.hpp"

namespace heisfock {

LaurentScalar::LaurentScalar(long coeff) { add_term(0, Rational(coeff)); }

LaurentScalar::LaurentScalar(const Rational& coeff) { add_term(0, coeff); }

LaurentScalar LaurentScalar::monomial(const Rational& exponent, const Rational& coeff) {
  LaurentScalar out;
  out.add_term(exponent, coeff);
  return out;
}

Rational LaurentScalar::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentScalar::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorKind::InvalidInput, "zero Laurent scalar has no lowest exponent");
  return terms_.begin()->first;
}

void LaurentScalar::add_term(const Rational& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentScalar::add_scaled(const LaurentScalar& other, const Rational& scale) {
  if (scale == 0) return;
  for (const auto& [e, c] : other.terms_) add_term(e, c * scale);
}

LaurentScalar LaurentScalar::shifted(const Rational& shift) const {
  LaurentScalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + shift, c);
  return out;
}

LaurentScalar LaurentScalar::reduce_exponents(const Rational& period) const {
  if (period <= 0) throw Error(ErrorKind::InvalidInput, "reduce_exponents: period must be positive");
  LaurentScalar out;
  for (const auto& [e, c] : terms_) {
    const Rational q = e / period;
    const long long whole = floor_to_ll(q);
    out.add_term(e - period * Rational(static_cast<long>(whole)), c);
  }
  return out;
}

Rational LaurentScalar::at_one() const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

bool LaurentScalar::exponents_divisible_by(long denominator) const {
  for (const auto& [e, c] : terms_) {
    if (Integer(denominator) % e.get_den() != 0) return false;
  }
  return true;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& other) {
  if (this == &other) {
    const LaurentScalar copy = other;
    return *this += copy;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& other) {
  if (this == &other) {
    const LaurentScalar copy = other;
    return *this -= copy;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentScalar LaurentScalar::operator-() const {
  LaurentScalar out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
  LaurentScalar out;
  for (const auto& [e1, c1] : a.terms_) {
    for (const auto& [e2, c2] : b.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& other) { return *this = *this * other; }

std::string LaurentScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational mag = abs(c);
    const bool unit = mag == 1;
    if (!unit || e == 0) out += format_rational(mag);
    if (e != 0) {
      if (!unit) out += "*";
      out += "v^" + (is_integral(e) ? format_rational(e) : "(" + format_rational(e) + ")");
    }
  }
  return out;
}

}  // namespace heisfock
