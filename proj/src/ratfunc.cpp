#include "h2cert/ratfunc.hpp"

#include "h2cert/error.hpp"

namespace h2cert {

RationalFunction::RationalFunction(std::uint64_t p) : num_(p), den_(PolyFp::constant(p, 1)) {}

RationalFunction::RationalFunction(PolyFp poly)
    : num_(std::move(poly)), den_(PolyFp::constant(num_.prime(), 1)) {}

RationalFunction::RationalFunction(const PolyFp& num, const PolyFp& den)
    : RationalFunction(ratfunc_normalize(num, den)) {}

RationalFunction ratfunc_normalize(const PolyFp& num, const PolyFp& den) {
  if (num.prime() != den.prime()) fail(ErrorCode::PrimeMismatch, "numerator and denominator primes differ");
  if (den.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
  const auto p = num.prime();
  if (num.is_zero()) return RationalFunction(RationalFunction::Reduced{}, PolyFp(p), PolyFp::constant(p, 1));
  PolyFp g = gcd(num, den);
  PolyFp n = divmod(num, g).first;
  PolyFp d = divmod(den, g).first;
  const Residue lead_inv = inverse_mod(d.leading(), p);
  return RationalFunction(RationalFunction::Reduced{}, n.scaled(lead_inv), d.scaled(lead_inv));
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) fail(ErrorCode::ZeroDenominator, "inverse of the zero rational function");
  return ratfunc_normalize(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return RationalFunction(Reduced{}, num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return ratfunc_normalize(a.num_ + b.num_, a.den_);
  return ratfunc_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return ratfunc_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::operator-() const { return RationalFunction(Reduced{}, -num_, den_); }

std::string RationalFunction::to_string() const {
  if (den_.degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace h2cert
