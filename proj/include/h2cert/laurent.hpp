#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "h2cert/poly_fp.hpp"
#include "h2cert/ratfunc.hpp"
#include "h2cert/series.hpp"

namespace h2cert {

/// Element of F_p((x)) known modulo x^order. Coefficients cover exponents
/// low_exp .. order-1 with a nonzero leading entry, so the valuation is
/// tight. The zero element has low_exp 0 and no stored coefficients.
class LaurentTrunc {
 public:
  LaurentTrunc(std::uint64_t p, long low_exp, long order, std::vector<Residue> coeffs);

  static LaurentTrunc zero(std::uint64_t p, long order);
  static LaurentTrunc from_series(const ModSeries& f);
  // Expansion of a rational function; exponents below the valuation of
  // the denominator come out negative.
  static LaurentTrunc from_rational(const RationalFunction& f, long order);

  std::uint64_t prime() const noexcept { return p_; }
  long order() const noexcept { return order_; }
  long low_exp() const noexcept { return low_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Valuation of a nonzero element; order() for zero.
  long valuation() const noexcept { return is_zero() ? order_ : low_; }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  // Coefficient of x^e for e < order(); throws IndexOutOfRange beyond.
  Residue coeff(long e) const;

  LaurentTrunc shifted(long k) const;  // times x^k
  LaurentTrunc scaled(Residue c) const;
  LaurentTrunc mul_poly(const PolyFp& r) const;
  LaurentTrunc with_order(long order) const;

  friend LaurentTrunc operator+(const LaurentTrunc& a, const LaurentTrunc& b);
  friend LaurentTrunc operator-(const LaurentTrunc& a, const LaurentTrunc& b);
  friend LaurentTrunc operator*(const LaurentTrunc& a, const LaurentTrunc& b);
  friend bool operator==(const LaurentTrunc&, const LaurentTrunc&) = default;

 private:
  void normalize();

  std::uint64_t p_;
  long low_;
  long order_;
  std::vector<Residue> coeffs_;
};

}  // namespace h2cert
