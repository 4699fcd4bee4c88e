#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace grcone {

// Exact arithmetic only. Degrees and exponents are arbitrary-precision
// integers; every slope is an exact rational in lowest terms with a
// positive denominator (cpp_rational keeps that canonical form).
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den reduced to lowest terms, sign carried by the numerator.
/// Throws ValidationError when den == 0.
Rational make_rational(Int num, Int den);

bool is_integral(const Rational& q);

/// The integer value of an integral rational. Throws Error otherwise.
Int as_integer(const Rational& q);

/// "p/q", or plain "n" when the denominator is 1.
std::string format_rational(const Rational& q);

/// Strict decimal integer: optional leading '-', digits only.
Int parse_integer(std::string_view text);

/// Accepts "p/q" or a plain integer; normalizes the result.
Rational parse_rational(std::string_view text);

/// Miller-Rabin probable-prime test (25 rounds); exact for small inputs.
bool is_prime(const Int& n);

Int pow_int(const Int& base, unsigned exponent);

/// Binomial coefficient C(n, k); 0 when k is outside 0..n.
Int binomial(int n, int k);

} // namespace grcone
