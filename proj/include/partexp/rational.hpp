#pragma once

// Exact arithmetic primitives shared by every module.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace partexp {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision fraction. GMP keeps every arithmetic result reduced
/// with a positive denominator; values built from raw parts must go through
/// make_rational() so the same holds for them.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error when den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "num/den" or a bare integer, with optional sign and surrounding
/// blanks. Throws std::invalid_argument on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

/// Reduced form: "3/2", "-4", "2" (denominator 1 is omitted).
std::string format_rational(const Rational& value);

/// Always "num/den", including "0/1" and "2/1".
std::string format_rational_full(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

BigInt factorial(unsigned long n);

}  // namespace partexp
