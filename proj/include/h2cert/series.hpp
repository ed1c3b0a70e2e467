#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "h2cert/coeff.hpp"

namespace h2cert {

/// Power series known modulo x^order. Arithmetic between two series
/// requires identical ring and order; there is no implicit re-truncation.
template <class C>
class TruncSeries {
 public:
  using coeff_type = C;
  using ops = Coeff<C>;

  TruncSeries(RingTag ring, std::size_t order) : ring_(ring) {
    require_ring<C>(ring_);
    if (order == 0) fail(ErrorCode::OrderMismatch, "truncation order must be positive");
    coeffs_.assign(order, ops::zero(ring_));
  }

  TruncSeries(RingTag ring, std::vector<C> coeffs) : ring_(ring), coeffs_(std::move(coeffs)) {
    require_ring<C>(ring_);
    if (coeffs_.empty()) fail(ErrorCode::OrderMismatch, "truncation order must be positive");
  }

  static TruncSeries one(const RingTag& ring, std::size_t order) {
    TruncSeries s(ring, order);
    s.coeffs_[0] = ops::from_integer(ring, 1);
    return s;
  }

  static TruncSeries monomial(const RingTag& ring, std::size_t order, std::size_t exponent, C c) {
    TruncSeries s(ring, order);
    if (exponent < order) s.coeffs_[exponent] = std::move(c);
    return s;
  }

  const RingTag& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return coeffs_.size(); }
  std::span<const C> coeffs() const noexcept { return coeffs_; }
  const C& operator[](std::size_t i) const { return coeffs_.at(i); }

  void set(std::size_t i, C value) { coeffs_.at(i) = std::move(value); }
  void add_at(std::size_t i, const C& value) { ops::add_to(ring_, coeffs_.at(i), value); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!ops::is_zero(c)) return false;
    }
    return true;
  }

  // Index of the first nonzero coefficient, or order() for the zero series.
  std::size_t valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!ops::is_zero(coeffs_[i])) return i;
    }
    return coeffs_.size();
  }

  TruncSeries& operator+=(const TruncSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) ops::add_to(ring_, coeffs_[i], rhs.coeffs_[i]);
    return *this;
  }

  TruncSeries& operator-=(const TruncSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) ops::sub_from(ring_, coeffs_[i], rhs.coeffs_[i]);
    return *this;
  }

  TruncSeries scaled(const C& c) const {
    TruncSeries out(ring_, order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = ops::mul(ring_, c, coeffs_[i]);
    return out;
  }

  TruncSeries operator-() const {
    TruncSeries out(*this);
    for (auto& c : out.coeffs_) c = ops::neg(ring_, c);
    return out;
  }

  // Multiplication by x^k, dropping what falls off the end.
  TruncSeries shifted(std::size_t k) const {
    TruncSeries out(ring_, order());
    for (std::size_t i = 0; i + k < order(); ++i) out.coeffs_[i + k] = coeffs_[i];
    return out;
  }

  // Same ring, truncated (or zero-padded) to a new order.
  TruncSeries with_order(std::size_t order) const {
    TruncSeries out(ring_, order);
    for (std::size_t i = 0; i < std::min(order, coeffs_.size()); ++i) out.coeffs_[i] = coeffs_[i];
    return out;
  }

  void check_compatible(const TruncSeries& rhs) const {
    if (!(ring_ == rhs.ring_)) fail(ErrorCode::RingMismatch, ring_.name() + " vs " + rhs.ring_.name());
    if (order() != rhs.order()) {
      fail(ErrorCode::OrderMismatch, "orders " + std::to_string(order()) + " and " + std::to_string(rhs.order()));
    }
  }

  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }

  // Throws on mismatched ring or order rather than comparing a common prefix.
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    a.check_compatible(b);
    return a.coeffs_ == b.coeffs_;
  }

 private:
  RingTag ring_;
  std::vector<C> coeffs_;
};

using ZSeries = TruncSeries<Integer>;
using ModSeries = TruncSeries<Residue>;
using RatSeries = TruncSeries<RationalFunction>;

/// Cauchy product truncated to the shared order.
template <class C>
TruncSeries<C> mul_trunc(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  a.check_compatible(b);
  const auto& ring = a.ring();
  const std::size_t n = a.order();
  TruncSeries<C> out(ring, n);
  std::vector<C> acc(out.coeffs().begin(), out.coeffs().end());
  for (std::size_t i = 0; i < n; ++i) {
    if (Coeff<C>::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (Coeff<C>::is_zero(b[j])) continue;
      Coeff<C>::fma(ring, acc[i + j], a[i], b[j]);
    }
  }
  return TruncSeries<C>(ring, std::move(acc));
}

template <class C>
TruncSeries<C> operator*(const TruncSeries<C>& a, const TruncSeries<C>& b) {
  return mul_trunc(a, b);
}

/// Inverse of a series whose constant term is a unit; NotAUnit otherwise.
template <class C>
TruncSeries<C> invert_unit(const TruncSeries<C>& f) {
  using ops = Coeff<C>;
  const auto& ring = f.ring();
  const std::size_t n = f.order();
  const C lead_inv = ops::inverse(ring, f[0]);
  std::vector<C> b(n, ops::zero(ring));
  b[0] = lead_inv;
  for (std::size_t k = 1; k < n; ++k) {
    C acc = ops::zero(ring);
    for (std::size_t i = 1; i <= k; ++i) {
      if (ops::is_zero(f[i])) continue;
      ops::fma(ring, acc, f[i], b[k - i]);
    }
    b[k] = ops::neg(ring, ops::mul(ring, lead_inv, acc));
  }
  return TruncSeries<C>(ring, std::move(b));
}

template <class C>
TruncSeries<C> pow_trunc(const TruncSeries<C>& f, unsigned e) {
  TruncSeries<C> result = TruncSeries<C>::one(f.ring(), f.order());
  TruncSeries<C> base = f;
  while (e > 0) {
    if (e & 1U) result = mul_trunc(result, base);
    e >>= 1U;
    if (e > 0) base = mul_trunc(base, base);
  }
  return result;
}

/// Componentwise residue of an integer series in F_p or Z/p^e.
ModSeries reduce_mod(const ZSeries& f, const RingTag& target);

/// Element of Z[t, t^-1]; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(const Integer& c, long exponent);

  void add_term(const Integer& c, long exponent);
  const std::map<long, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::map<long, Integer> terms_;
};

/// Image of q under the ring map t -> 1 + x, truncated at `order`.
/// Negative powers go through invert_unit(1 + x).
ZSeries phi_map(const LaurentPoly& q, std::size_t order);

}  // namespace h2cert
