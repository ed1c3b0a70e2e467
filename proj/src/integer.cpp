#include "h2cert/integer.hpp"

#include <cctype>
#include <limits>

namespace h2cert {

Integer factorial(unsigned k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Integer power(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

std::optional<std::int64_t> to_int64(const Integer& value) {
  if (value < Integer(std::numeric_limits<long>::min()) || value > Integer(std::numeric_limits<long>::max())) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(value.get_si());
}

std::optional<Integer> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  Rational q(*num, *den);
  q.canonicalize();
  return q;
}

}  // namespace h2cert
