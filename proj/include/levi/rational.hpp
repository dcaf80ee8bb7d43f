#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace levi {

/// Arbitrary precision rational, always kept in lowest terms with positive
/// denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

/// Parses "p/q" or "p" (optional sign on p). Throws ParseError on anything
/// else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& q);

Vector zero_vector(int n);
Vector unit_vector(int n, int i);

}  // namespace levi
