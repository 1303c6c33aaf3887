#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sptri
{

/// Exact scalar. GMP keeps every value in lowest terms with a positive
/// denominator after each arithmetic operation; values built from raw
/// numerator/denominator pairs go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// "num/den", always with an explicit denominator ("3/1", "0/1").
std::string to_string(Rational const &q);

/// Accepts "num/den" or a bare integer; throws ParseError.
Rational parse_rational(std::string_view text);

} // namespace sptri
