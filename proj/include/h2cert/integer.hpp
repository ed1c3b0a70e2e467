#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace h2cert {

using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(unsigned k);
Integer power(const Integer& base, unsigned exponent);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Empty when the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& value);

// Exact parse of an optionally signed decimal literal.
std::optional<Integer> parse_integer(std::string_view text);
std::optional<Rational> parse_rational(std::string_view text);

}  // namespace h2cert
