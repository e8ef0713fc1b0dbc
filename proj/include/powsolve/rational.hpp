#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace powsolve {

using Integer = mpz_class;
using Rational = mpq_class;

Rational binomial(int n, int k);

/// "p/q", or "p" when the denominator is 1.
std::string toString(const Rational& r);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text or q = 0.
Rational parseRational(std::string_view text);

/// Exact k-th root when r is the k-th power of a rational (odd k allows negative r).
std::optional<Rational> exactRoot(const Rational& r, unsigned k);

bool isSquare(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

/// Lcm of denominators.
Integer commonDenominator(const std::vector<Rational>& values);

/// Bit length of the largest numerator or denominator.
std::size_t maxBits(const std::vector<Rational>& values);

}  // namespace powsolve
