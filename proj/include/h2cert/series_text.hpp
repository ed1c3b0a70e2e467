#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "h2cert/bi_series.hpp"
#include "h2cert/series.hpp"

namespace h2cert {

/// One parsed monomial: integer coefficient and exponent per variable.
struct TextTerm {
  Integer coeff;
  std::map<char, long> exponents;
};

/// Parses a sparse sum such as `1*x^4*y^2 - 2*x^15*y^3 + 7`. Only the
/// variables listed in `variables` are accepted; negative exponents only
/// when `allow_negative` is set. Throws ParseError on anything else.
std::vector<TextTerm> parse_terms(std::string_view text, std::string_view variables, bool allow_negative = false);

ZSeries parse_series(std::string_view text, std::size_t order);
ZBiSeries parse_bi_series(std::string_view text, std::size_t nx, std::size_t ny);
BiPoly parse_bi_poly(std::string_view text);
LaurentPoly parse_laurent_poly(std::string_view text);  // variable t
std::vector<Integer> parse_int_poly(std::string_view text);  // variable x, low degree first

template <class C>
std::string format_term(const RingTag& ring, const C& c, std::size_t a, std::size_t b, bool first) {
  std::string body = Coeff<C>::text(ring, c);
  std::string sign = first ? "" : " + ";
  if constexpr (std::is_same_v<C, Integer>) {
    if (sgn(c) < 0) {
      sign = first ? "-" : " - ";
      body = Integer(-c).get_str();
    }
  }
  std::string out = sign + body;
  if (a > 0) out += "*x^" + std::to_string(a);
  if (b > 0) out += "*y^" + std::to_string(b);
  return out;
}

template <class C>
std::string format_series(const TruncSeries<C>& f) {
  std::string out;
  for (std::size_t a = 0; a < f.order(); ++a) {
    if (Coeff<C>::is_zero(f[a])) continue;
    out += format_term(f.ring(), f[a], a, 0, out.empty());
  }
  return out.empty() ? "0" : out;
}

template <class C>
std::string format_bi_series(const BiSeries<C>& f) {
  std::string out;
  for (std::size_t b = 0; b < f.ny(); ++b) {
    const auto& row = f.row(b);
    for (std::size_t a = 0; a < f.nx(); ++a) {
      if (Coeff<C>::is_zero(row[a])) continue;
      out += format_term(f.ring(), row[a], a, b, out.empty());
    }
  }
  return out.empty() ? "0" : out;
}

std::string format_laurent_poly(const LaurentPoly& q);

}  // namespace h2cert
