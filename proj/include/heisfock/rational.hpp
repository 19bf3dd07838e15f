#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace heisfock {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" into a canonical rational. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" with q > 1, or "p" when the value is integral.
std::string format_rational(const Rational& value);

/// num/den in canonical form. Throws InvalidInput if den == 0.
Rational make_rational(long num, long den);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

/// Floor of a rational as a machine integer. Throws RangeError if it does not fit.
long long floor_to_ll(const Rational& value);

/// Value reduced into [0,1) together with the integer part that was removed.
struct FractionalSplit {
  Rational residue;
  long long carry;
};
FractionalSplit split_fractional(const Rational& value);

}  // namespace heisfock
