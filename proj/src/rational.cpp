#include "heisfock/rational.hpp"

#include <cctype>
#include <limits>

#include "heisfock/errors.hpp"

namespace heisfock {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::InvalidInput, "empty rational");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
                    (i == 0 && (c == '-' || c == '+'));
    if (!ok) throw Error(ErrorKind::InvalidInput, "malformed rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0) {
    throw Error(ErrorKind::InvalidInput, "malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorKind::InvalidInput, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidInput, "zero denominator");
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(); }

long long floor_to_ll(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  if (!q.fits_slong_p()) throw Error(ErrorKind::RangeError, "integer part out of range");
  return q.get_si();
}

FractionalSplit split_fractional(const Rational& value) {
  const long long carry = floor_to_ll(value);
  return {value - Rational(Integer(static_cast<long>(carry))), carry};
}

}  // namespace heisfock
