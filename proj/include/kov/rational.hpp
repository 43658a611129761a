#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kov {

/// Exact rational number; GMP keeps it in lowest terms with a positive
/// denominator after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// "num/den", or just "num" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "num", "-num", "num/den". Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace kov
