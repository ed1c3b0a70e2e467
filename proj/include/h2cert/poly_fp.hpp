#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "h2cert/integer.hpp"
#include "h2cert/ring.hpp"

namespace h2cert {

/// Dense polynomial over F_p. Coefficients are stored low degree first with
/// no trailing zeros, so the zero polynomial has an empty coefficient list.
class PolyFp {
 public:
  explicit PolyFp(std::uint64_t p);
  PolyFp(std::uint64_t p, std::vector<Residue> coeffs);

  static PolyFp constant(std::uint64_t p, Residue c);
  static PolyFp monomial(std::uint64_t p, Residue c, std::size_t degree);
  static PolyFp from_integers(std::uint64_t p, std::span<const Integer> coeffs);

  std::uint64_t prime() const noexcept { return p_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Residue operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::span<const Residue> coeffs() const noexcept { return coeffs_; }

  PolyFp monic() const;
  PolyFp scaled(Residue c) const;
  PolyFp pow(unsigned e) const;

  PolyFp& operator+=(const PolyFp& rhs);
  PolyFp& operator-=(const PolyFp& rhs);

  friend PolyFp operator+(PolyFp lhs, const PolyFp& rhs) { return lhs += rhs; }
  friend PolyFp operator-(PolyFp lhs, const PolyFp& rhs) { return lhs -= rhs; }
  friend PolyFp operator*(const PolyFp& lhs, const PolyFp& rhs);
  PolyFp operator-() const;

  friend bool operator==(const PolyFp&, const PolyFp&) = default;

  std::string to_string(char var = 'x') const;

 private:
  void trim() noexcept;

  std::uint64_t p_;
  std::vector<Residue> coeffs_;
};

// Quotient and remainder; throws ZeroDenominator when b = 0.
std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);

// Monic gcd (zero when both inputs are zero).
PolyFp gcd(PolyFp a, PolyFp b);

}  // namespace h2cert
