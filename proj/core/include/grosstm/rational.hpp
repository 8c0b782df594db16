#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace grosstm {

// Arbitrary-precision exact arithmetic. cpp_rational keeps numerator and
// denominator in lowest terms with a positive denominator, which is exactly
// the normal form the number layer needs.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// b^e for a non-negative integer e. Throws UnsupportedExponent past the
// expansion cap (2^24).
BigInt int_pow(const BigInt& base, const BigInt& exp);

// b^e for any integer e; negative e inverts (throws DivisionByZero on b = 0).
Rational rational_pow(const Rational& base, const BigInt& exp);

// Largest r with r^n <= x, for x >= 0, n >= 1.
BigInt floor_nth_root(const BigInt& x, unsigned long n);

// r with r^n == x exactly, if it exists.
std::optional<BigInt> exact_nth_root(const BigInt& x, unsigned long n);

// base^exp when the result is rational (e.g. 4^(1/2) = 2); base must be > 0.
std::optional<Rational> exact_rational_pow(const Rational& base, const Rational& exp);

bool is_integer(const Rational& q);

std::string to_string(const Rational& q);

}  // namespace grosstm
