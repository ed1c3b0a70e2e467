#pragma once

#include <cstdint>
#include <string>

#include "h2cert/poly_fp.hpp"

namespace h2cert {

/// Element of F_p(x) held as a reduced fraction with monic denominator.
/// Equality is structural because the representation is canonical.
class RationalFunction {
 public:
  explicit RationalFunction(std::uint64_t p);  // zero
  explicit RationalFunction(PolyFp poly);
  RationalFunction(const PolyFp& num, const PolyFp& den);

  static RationalFunction zero(std::uint64_t p) { return RationalFunction(p); }
  static RationalFunction one(std::uint64_t p) { return RationalFunction(PolyFp::constant(p, 1)); }
  static RationalFunction constant(std::uint64_t p, Residue c) {
    return RationalFunction(PolyFp::constant(p, c));
  }

  std::uint64_t prime() const noexcept { return num_.prime(); }
  const PolyFp& num() const noexcept { return num_; }
  const PolyFp& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string() const;

 private:
  struct Reduced {};
  RationalFunction(Reduced, PolyFp num, PolyFp den) : num_(std::move(num)), den_(std::move(den)) {}

  PolyFp num_;
  PolyFp den_;

  friend RationalFunction ratfunc_normalize(const PolyFp& num, const PolyFp& den);
};

/// Reduces num/den by their gcd and makes the denominator monic.
/// Throws ZeroDenominator when den = 0 and PrimeMismatch on mixed primes.
RationalFunction ratfunc_normalize(const PolyFp& num, const PolyFp& den);

}  // namespace h2cert
