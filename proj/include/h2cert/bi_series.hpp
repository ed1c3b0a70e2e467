#pragma once

#include <cstddef>
#include <vector>

#include "h2cert/series.hpp"

namespace h2cert {

/// Bivariate series truncated at x^nx, y^ny, stored y-major: row j is the
/// coefficient f_j(x) of y^j, so F is read as an element of A[[y]].
template <class C>
class BiSeries {
 public:
  using ops = Coeff<C>;

  BiSeries(RingTag ring, std::size_t nx, std::size_t ny) : ring_(ring), nx_(nx) {
    require_ring<C>(ring_);
    if (nx == 0 || ny == 0) fail(ErrorCode::OrderMismatch, "truncation orders must be positive");
    rows_.assign(ny, TruncSeries<C>(ring_, nx));
  }

  BiSeries(RingTag ring, std::size_t nx, std::vector<TruncSeries<C>> rows)
      : ring_(ring), nx_(nx), rows_(std::move(rows)) {
    require_ring<C>(ring_);
    if (rows_.empty()) fail(ErrorCode::OrderMismatch, "truncation orders must be positive");
    for (const auto& r : rows_) {
      if (!(r.ring() == ring_)) fail(ErrorCode::RingMismatch, "row ring differs from series ring");
      if (r.order() != nx_) fail(ErrorCode::OrderMismatch, "row order differs from nx");
    }
  }

  const RingTag& ring() const noexcept { return ring_; }
  std::size_t nx() const noexcept { return nx_; }
  std::size_t ny() const noexcept { return rows_.size(); }

  const TruncSeries<C>& row(std::size_t j) const { return rows_.at(j); }
  const std::vector<TruncSeries<C>>& rows() const noexcept { return rows_; }
  void set_row(std::size_t j, TruncSeries<C> r) {
    r.check_compatible(rows_.at(j));
    rows_[j] = std::move(r);
  }

  // Coefficient of x^a y^b.
  const C& at(std::size_t a, std::size_t b) const { return rows_.at(b)[a]; }
  void set(std::size_t a, std::size_t b, C value) { rows_.at(b).set(a, std::move(value)); }
  void add_at(std::size_t a, std::size_t b, const C& value) { rows_.at(b).add_at(a, value); }

  bool is_zero() const {
    for (const auto& r : rows_) {
      if (!r.is_zero()) return false;
    }
    return true;
  }

  void check_compatible(const BiSeries& rhs) const {
    if (!(ring_ == rhs.ring_)) fail(ErrorCode::RingMismatch, ring_.name() + " vs " + rhs.ring_.name());
    if (nx_ != rhs.nx_ || ny() != rhs.ny()) fail(ErrorCode::OrderMismatch, "bivariate truncations differ");
  }

  BiSeries& operator+=(const BiSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t j = 0; j < rows_.size(); ++j) rows_[j] += rhs.rows_[j];
    return *this;
  }
  BiSeries& operator-=(const BiSeries& rhs) {
    check_compatible(rhs);
    for (std::size_t j = 0; j < rows_.size(); ++j) rows_[j] -= rhs.rows_[j];
    return *this;
  }
  BiSeries scaled(const C& c) const {
    BiSeries out(*this);
    for (auto& r : out.rows_) r = r.scaled(c);
    return out;
  }
  BiSeries operator-() const {
    BiSeries out(*this);
    for (auto& r : out.rows_) r = -r;
    return out;
  }

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    a.check_compatible(b);
    for (std::size_t j = 0; j < a.rows_.size(); ++j) {
      if (!(a.rows_[j] == b.rows_[j])) return false;
    }
    return true;
  }

 private:
  RingTag ring_;
  std::size_t nx_;
  std::vector<TruncSeries<C>> rows_;
};

using ZBiSeries = BiSeries<Integer>;
using ModBiSeries = BiSeries<Residue>;

/// One term c * x^a * y^b of a bivariate polynomial with integer coefficients.
struct BiTerm {
  Integer coeff;
  std::size_t x_exp = 0;
  std::size_t y_exp = 0;
};
using BiPoly = std::vector<BiTerm>;

/// F(y, x): the coefficient matrix transposed.
template <class C>
BiSeries<C> transpose(const BiSeries<C>& f) {
  BiSeries<C> out(f.ring(), f.ny(), f.nx());
  for (std::size_t b = 0; b < f.ny(); ++b) {
    for (std::size_t a = 0; a < f.nx(); ++a) {
      if (!Coeff<C>::is_zero(f.at(a, b))) out.set(b, a, f.at(a, b));
    }
  }
  return out;
}

/// F(x, y) - F(y, x). Needs a square truncation.
template <class C>
BiSeries<C> antisymmetrize(const BiSeries<C>& f) {
  if (f.nx() != f.ny()) {
    fail(ErrorCode::NonSquareTruncation,
         "antisymmetrize needs nx == ny, got " + std::to_string(f.nx()) + " and " + std::to_string(f.ny()));
  }
  return f - transpose(f);
}

/// Product with a sparse bivariate polynomial, truncated at (nx, ny).
template <class C>
BiSeries<C> mul_by_poly(const BiSeries<C>& f, const BiPoly& poly) {
  const auto& ring = f.ring();
  BiSeries<C> out(ring, f.nx(), f.ny());
  for (const auto& term : poly) {
    const C c = Coeff<C>::from_integer(ring, term.coeff);
    if (Coeff<C>::is_zero(c)) continue;
    for (std::size_t b = 0; b + term.y_exp < f.ny(); ++b) {
      const auto& row = f.row(b);
      for (std::size_t a = 0; a + term.x_exp < f.nx(); ++a) {
        if (Coeff<C>::is_zero(row[a])) continue;
        out.add_at(a + term.x_exp, b + term.y_exp, Coeff<C>::mul(ring, c, row[a]));
      }
    }
  }
  return out;
}

/// f(x) * g(y) with nx = order(f), ny = order(g).
template <class C>
BiSeries<C> outer_product(const TruncSeries<C>& f, const TruncSeries<C>& g) {
  if (!(f.ring() == g.ring())) fail(ErrorCode::RingMismatch, f.ring().name() + " vs " + g.ring().name());
  std::vector<TruncSeries<C>> rows;
  rows.reserve(g.order());
  for (std::size_t j = 0; j < g.order(); ++j) {
    rows.push_back(Coeff<C>::is_zero(g[j]) ? TruncSeries<C>(f.ring(), f.order()) : f.scaled(g[j]));
  }
  return BiSeries<C>(f.ring(), f.order(), std::move(rows));
}

ModBiSeries reduce_mod(const ZBiSeries& f, const RingTag& target);

}  // namespace h2cert
