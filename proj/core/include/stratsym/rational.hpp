#pragma once

#include <gmpxx.h>

#include <string>

namespace stratsym {

// Exact rational scalar. GMP keeps values canonical (gcd(num, den) = 1,
// den > 0), which the operator identities rely on: every algebraic check
// in this library compares against zero exactly, never within a tolerance.
using Scalar = mpq_class;

/// Parses "p" or "p/q" with arbitrary-precision integers. Throws
/// DomainError(ParseError) on malformed input or zero denominator.
Scalar scalar_from_string(const std::string& text);

std::string scalar_to_string(const Scalar& value);

double scalar_to_double(const Scalar& value);

/// value^k for k >= 0.
Scalar scalar_pow(const Scalar& value, int k);

/// k! as an exact scalar.
Scalar factorial(int k);

}  // namespace stratsym
