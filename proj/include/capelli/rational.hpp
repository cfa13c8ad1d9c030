#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace capelli {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds p/q in canonical form. Throws std::domain_error when q == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Canonical text: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& r);

/// Integer power with non-negative exponent.
Rational pow(const Rational& base, unsigned exp);

}  // namespace capelli
