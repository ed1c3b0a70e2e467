#include "h2cert/laurent.hpp"

#include <algorithm>

#include "h2cert/error.hpp"

namespace h2cert {

LaurentTrunc::LaurentTrunc(std::uint64_t p, long low_exp, long order, std::vector<Residue> coeffs)
    : p_(p), low_(low_exp), order_(order), coeffs_(std::move(coeffs)) {
  if (low_ > order_) fail(ErrorCode::OrderMismatch, "low exponent beyond truncation order");
  for (auto& c : coeffs_) c %= p_;
  coeffs_.resize(static_cast<std::size_t>(order_ - low_), 0);
  normalize();
}

void LaurentTrunc::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  const auto skip = std::distance(coeffs_.begin(), first);
  coeffs_.erase(coeffs_.begin(), first);
  low_ += static_cast<long>(skip);
}

LaurentTrunc LaurentTrunc::zero(std::uint64_t p, long order) { return LaurentTrunc(p, 0, std::max(order, 0L), {}); }

LaurentTrunc LaurentTrunc::from_series(const ModSeries& f) {
  if (f.ring().kind() != RingKind::Fp) fail(ErrorCode::RingMismatch, "Laurent series live over F_p, got " + f.ring().name());
  return LaurentTrunc(f.ring().prime(), 0, static_cast<long>(f.order()),
                      std::vector<Residue>(f.coeffs().begin(), f.coeffs().end()));
}

LaurentTrunc LaurentTrunc::from_rational(const RationalFunction& f, long order) {
  const auto p = f.prime();
  if (f.is_zero()) return zero(p, order);
  const PolyFp& den = f.den();
  long shift = 0;
  while (den[static_cast<std::size_t>(shift)] == 0) ++shift;
  const long len = order + shift;
  if (len <= 0) return zero(p, order);
  const RingTag fp = RingTag::prime_field(p);
  auto to_series = [&](const PolyFp& poly, long skip) {
    std::vector<Residue> v(static_cast<std::size_t>(len), 0);
    for (long i = skip; i <= poly.degree(); ++i) {
      if (i - skip < len) v[static_cast<std::size_t>(i - skip)] = poly[static_cast<std::size_t>(i)];
    }
    return ModSeries(fp, std::move(v));
  };
  ModSeries quotient = mul_trunc(to_series(f.num(), 0), invert_unit(to_series(den, shift)));
  return LaurentTrunc(p, -shift, order, std::vector<Residue>(quotient.coeffs().begin(), quotient.coeffs().end()));
}

Residue LaurentTrunc::coeff(long e) const {
  if (e >= order_) fail(ErrorCode::IndexOutOfRange, "exponent " + std::to_string(e) + " beyond truncation");
  if (is_zero() || e < low_) return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

LaurentTrunc LaurentTrunc::shifted(long k) const {
  LaurentTrunc out(*this);
  out.order_ += k;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentTrunc LaurentTrunc::scaled(Residue c) const {
  std::vector<Residue> v(coeffs_);
  for (auto& x : v) x = mul_mod(x, c % p_, p_);
  return LaurentTrunc(p_, low_, order_, std::move(v));
}

LaurentTrunc LaurentTrunc::mul_poly(const PolyFp& r) const {
  if (r.prime() != p_) fail(ErrorCode::PrimeMismatch, "polynomial and series primes differ");
  if (is_zero() || r.is_zero()) return zero(p_, order_);
  std::vector<Residue> v(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < r.coeffs().size() && i + j < v.size(); ++j) {
      v[i + j] = add_mod(v[i + j], mul_mod(coeffs_[i], r[j], p_), p_);
    }
  }
  return LaurentTrunc(p_, low_, order_, std::move(v));
}

LaurentTrunc LaurentTrunc::with_order(long order) const {
  if (order <= low_ || is_zero()) return zero(p_, order);
  std::vector<Residue> v(coeffs_.begin(), coeffs_.begin() + std::min<long>(order - low_, static_cast<long>(coeffs_.size())));
  return LaurentTrunc(p_, low_, order, std::move(v));
}

namespace {

LaurentTrunc combine(const LaurentTrunc& a, const LaurentTrunc& b, bool subtract) {
  if (a.prime() != b.prime()) fail(ErrorCode::PrimeMismatch, "Laurent series primes differ");
  if (a.order() != b.order()) fail(ErrorCode::OrderMismatch, "Laurent truncation orders differ");
  const auto p = a.prime();
  const long low = std::min(a.is_zero() ? a.order() : a.low_exp(), b.is_zero() ? b.order() : b.low_exp());
  if (low >= a.order()) return LaurentTrunc::zero(p, a.order());
  std::vector<Residue> v(static_cast<std::size_t>(a.order() - low), 0);
  for (long e = low; e < a.order(); ++e) {
    Residue x = a.coeff(e);
    Residue y = b.coeff(e);
    v[static_cast<std::size_t>(e - low)] = subtract ? sub_mod(x, y, p) : add_mod(x, y, p);
  }
  return LaurentTrunc(p, low, a.order(), std::move(v));
}

}  // namespace

LaurentTrunc operator+(const LaurentTrunc& a, const LaurentTrunc& b) { return combine(a, b, false); }
LaurentTrunc operator-(const LaurentTrunc& a, const LaurentTrunc& b) { return combine(a, b, true); }

LaurentTrunc operator*(const LaurentTrunc& a, const LaurentTrunc& b) {
  if (a.p_ != b.p_) fail(ErrorCode::PrimeMismatch, "Laurent series primes differ");
  const auto p = a.p_;
  // x^v * O(x^N) is only known to order v + N.
  const long order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
  if (a.is_zero() || b.is_zero()) return LaurentTrunc::zero(p, order);
  const long low = a.low_ + b.low_;
  std::vector<Residue> v(static_cast<std::size_t>(std::max(order - low, 0L)), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < v.size(); ++j) {
      v[i + j] = add_mod(v[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], p), p);
    }
  }
  return LaurentTrunc(p, low, order, std::move(v));
}

}  // namespace h2cert
