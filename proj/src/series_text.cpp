#include "h2cert/series_text.hpp"

#include <cctype>

namespace h2cert {
namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::string_view vars, bool allow_negative)
      : text_(text), vars_(vars), allow_negative_(allow_negative) {}

  std::vector<TextTerm> run() {
    std::vector<TextTerm> out;
    skip_ws();
    if (pos_ == text_.size()) error("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = take() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        error("expected '+' or '-'");
      }
      TextTerm term = parse_term();
      if (sign < 0) term.coeff = -term.coeff;
      out.push_back(std::move(term));
      first = false;
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return out;
  }

 private:
  TextTerm parse_term() {
    TextTerm term;
    term.coeff = 1;
    bool have_factor = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= parse_unsigned();
      } else if (c != '\0' && vars_.find(c) != std::string_view::npos) {
        ++pos_;
        long e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          bool negative = false;
          if (peek() == '-') {
            if (!allow_negative_) error("negative exponent");
            negative = true;
            ++pos_;
          }
          auto v = parse_unsigned();
          if (v > Integer(1L << 40)) error("exponent too large");
          e = negative ? -v.get_si() : v.get_si();
        }
        term.exponents[c] += e;
      } else {
        error(have_factor ? "expected factor after '*'" : "expected coefficient or variable");
      }
      have_factor = true;
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return term;
  }

  Integer parse_unsigned() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) error("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::string_view vars_;
  bool allow_negative_;
  std::size_t pos_ = 0;
};

long exponent_of(const TextTerm& t, char var) {
  auto it = t.exponents.find(var);
  return it == t.exponents.end() ? 0 : it->second;
}

}  // namespace

std::vector<TextTerm> parse_terms(std::string_view text, std::string_view variables, bool allow_negative) {
  return TermParser(text, variables, allow_negative).run();
}

ZSeries parse_series(std::string_view text, std::size_t order) {
  ZSeries out(RingTag::integers(), order);
  for (const auto& t : parse_terms(text, "x")) {
    auto a = static_cast<std::size_t>(exponent_of(t, 'x'));
    if (a < order) out.add_at(a, t.coeff);
  }
  return out;
}

ZBiSeries parse_bi_series(std::string_view text, std::size_t nx, std::size_t ny) {
  ZBiSeries out(RingTag::integers(), nx, ny);
  for (const auto& t : parse_terms(text, "xy")) {
    auto a = static_cast<std::size_t>(exponent_of(t, 'x'));
    auto b = static_cast<std::size_t>(exponent_of(t, 'y'));
    if (a < nx && b < ny) out.add_at(a, b, t.coeff);
  }
  return out;
}

BiPoly parse_bi_poly(std::string_view text) {
  BiPoly out;
  for (const auto& t : parse_terms(text, "xy")) {
    out.push_back({t.coeff, static_cast<std::size_t>(exponent_of(t, 'x')), static_cast<std::size_t>(exponent_of(t, 'y'))});
  }
  return out;
}

LaurentPoly parse_laurent_poly(std::string_view text) {
  LaurentPoly out;
  for (const auto& t : parse_terms(text, "t", true)) out.add_term(t.coeff, exponent_of(t, 't'));
  return out;
}

std::vector<Integer> parse_int_poly(std::string_view text) {
  std::vector<Integer> out;
  for (const auto& t : parse_terms(text, "x")) {
    auto a = static_cast<std::size_t>(exponent_of(t, 'x'));
    if (out.size() <= a) out.resize(a + 1, 0);
    out[a] += t.coeff;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string format_laurent_poly(const LaurentPoly& q) {
  std::string out;
  for (const auto& [e, c] : q.terms()) {
    bool negative = sgn(c) < 0;
    if (out.empty()) {
      out += negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += Integer(abs(c)).get_str();
    if (e != 0) out += "*t^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

}  // namespace h2cert
