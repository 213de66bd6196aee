#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace extremal {

// Exact scalars. GMP keeps mpq_class values in lowest terms with a positive
// denominator after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "int" or "int/int" (optional leading '-' or '+'). Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt factorial(unsigned n);

/// num/den in lowest terms; den must be nonzero.
Rational ratio(const BigInt& num, const BigInt& den);

}  // namespace extremal
