#pragma once

#include <string>

#include "h2cert/error.hpp"
#include "h2cert/integer.hpp"
#include "h2cert/ratfunc.hpp"
#include "h2cert/ring.hpp"

namespace h2cert {

/// Arithmetic for one coefficient representation under a RingTag.
/// Integer backs IntZ, Residue backs Fp and Z/p^e, RationalFunction backs F_p(x).
template <class C>
struct Coeff;

template <>
struct Coeff<Integer> {
  static bool accepts(const RingTag& r) noexcept { return r.kind() == RingKind::IntZ; }
  static Integer zero(const RingTag&) { return 0; }
  static Integer from_integer(const RingTag&, const Integer& v) { return v; }
  static bool is_zero(const Integer& a) noexcept { return sgn(a) == 0; }
  static void add_to(const RingTag&, Integer& acc, const Integer& b) { acc += b; }
  static void sub_from(const RingTag&, Integer& acc, const Integer& b) { acc -= b; }
  static void fma(const RingTag&, Integer& acc, const Integer& a, const Integer& b) { acc += a * b; }
  static Integer mul(const RingTag&, const Integer& a, const Integer& b) { return a * b; }
  static Integer neg(const RingTag&, const Integer& a) { return -a; }
  static Integer inverse(const RingTag& r, const Integer& a) {
    if (a == 1 || a == -1) return a;
    fail(ErrorCode::NotAUnit, a.get_str() + " is not a unit in " + r.name());
  }
  static std::string text(const RingTag&, const Integer& a) { return a.get_str(); }
};

template <>
struct Coeff<Residue> {
  static bool accepts(const RingTag& r) noexcept { return r.is_modular(); }
  static Residue zero(const RingTag&) noexcept { return 0; }
  static Residue from_integer(const RingTag& r, const Integer& v) { return reduce(v, r.modulus()); }
  static bool is_zero(Residue a) noexcept { return a == 0; }
  static void add_to(const RingTag& r, Residue& acc, Residue b) noexcept { acc = add_mod(acc, b, r.modulus()); }
  static void sub_from(const RingTag& r, Residue& acc, Residue b) noexcept { acc = sub_mod(acc, b, r.modulus()); }
  static void fma(const RingTag& r, Residue& acc, Residue a, Residue b) noexcept {
    acc = add_mod(acc, mul_mod(a, b, r.modulus()), r.modulus());
  }
  static Residue mul(const RingTag& r, Residue a, Residue b) noexcept { return mul_mod(a, b, r.modulus()); }
  static Residue neg(const RingTag& r, Residue a) noexcept { return neg_mod(a, r.modulus()); }
  static Residue inverse(const RingTag& r, Residue a) { return inverse_mod(a, r.modulus()); }
  static std::string text(const RingTag&, Residue a) { return std::to_string(a); }
};

template <>
struct Coeff<RationalFunction> {
  static bool accepts(const RingTag& r) noexcept { return r.kind() == RingKind::RatFuncFp; }
  static RationalFunction zero(const RingTag& r) { return RationalFunction::zero(r.prime()); }
  static RationalFunction from_integer(const RingTag& r, const Integer& v) {
    return RationalFunction::constant(r.prime(), reduce(v, r.prime()));
  }
  static bool is_zero(const RationalFunction& a) noexcept { return a.is_zero(); }
  static void add_to(const RingTag&, RationalFunction& acc, const RationalFunction& b) { acc = acc + b; }
  static void sub_from(const RingTag&, RationalFunction& acc, const RationalFunction& b) { acc = acc - b; }
  static void fma(const RingTag&, RationalFunction& acc, const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return;
    acc = acc + a * b;
  }
  static RationalFunction mul(const RingTag&, const RationalFunction& a, const RationalFunction& b) { return a * b; }
  static RationalFunction neg(const RingTag&, const RationalFunction& a) { return -a; }
  static RationalFunction inverse(const RingTag&, const RationalFunction& a) {
    if (a.is_zero()) fail(ErrorCode::NotAUnit, "zero is not a unit in F_p(x)");
    return a.inverse();
  }
  static std::string text(const RingTag&, const RationalFunction& a) { return a.to_string(); }
};

template <class C>
void require_ring(const RingTag& ring) {
  if (!Coeff<C>::accepts(ring)) fail(ErrorCode::RingMismatch, "coefficient type cannot carry ring " + ring.name());
}

}  // namespace h2cert
