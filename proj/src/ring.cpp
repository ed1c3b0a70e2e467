#include "h2cert/ring.hpp"

#include <limits>

#include "h2cert/error.hpp"

namespace h2cert {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

RingTag::RingTag(RingKind kind, std::uint64_t p, unsigned e) noexcept : kind_(kind), p_(p), e_(e), modulus_(0) {
  if (kind == RingKind::Fp) modulus_ = p;
  if (kind == RingKind::ZmodPE) {
    modulus_ = 1;
    for (unsigned i = 0; i < e; ++i) modulus_ *= p;
  }
}

RingTag RingTag::prime_field(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 62)) fail(ErrorCode::UnsupportedRing, "prime exceeds 62 bits");
  return RingTag(RingKind::Fp, p, 1);
}

RingTag RingTag::prime_power(std::uint64_t p, unsigned e) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e < 1) fail(ErrorCode::UnsupportedRing, "Z/p^e needs e >= 1");
  std::uint64_t m = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (m > (std::uint64_t{1} << 62) / p) fail(ErrorCode::UnsupportedRing, "p^e exceeds 62 bits");
    m *= p;
  }
  return RingTag(RingKind::ZmodPE, p, e);
}

RingTag RingTag::rational_functions(std::uint64_t p) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return RingTag(RingKind::RatFuncFp, p, 1);
}

std::string RingTag::name() const {
  switch (kind_) {
    case RingKind::IntZ: return "Z";
    case RingKind::Fp: return "F_" + std::to_string(p_);
    case RingKind::ZmodPE: return "Z/" + std::to_string(p_) + "^" + std::to_string(e_);
    case RingKind::RatFuncFp: return "F_" + std::to_string(p_) + "(x)";
  }
  return "?";
}

Residue reduce(const Integer& value, std::uint64_t m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), m);
  return static_cast<Residue>(r.get_ui());
}

Residue reduce(std::int64_t value, std::uint64_t m) noexcept {
  auto mm = static_cast<__int128>(m);
  __int128 r = static_cast<__int128>(value) % mm;
  if (r < 0) r += mm;
  return static_cast<Residue>(r);
}

Residue inverse_mod(Residue a, std::uint64_t m) {
  // Extended Euclid on signed 128-bit to stay clear of overflow.
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) fail(ErrorCode::NotAUnit, std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  __int128 mm = m;
  __int128 inv = old_s % mm;
  if (inv < 0) inv += mm;
  return static_cast<Residue>(inv);
}

Integer modular_inverse(const Integer& a, const RingTag& tag) {
  switch (tag.kind()) {
    case RingKind::IntZ:
      if (a == 1 || a == -1) return a;
      fail(ErrorCode::UnsupportedRing, "only +-1 are invertible over Z, got " + a.get_str());
    case RingKind::Fp:
    case RingKind::ZmodPE:
      return Integer(static_cast<unsigned long>(inverse_mod(reduce(a, tag.modulus()), tag.modulus())));
    case RingKind::RatFuncFp:
      break;
  }
  fail(ErrorCode::UnsupportedRing, "modular_inverse is defined for Fp and Z/p^e only");
}

std::int64_t centred(Residue a, std::uint64_t m) noexcept {
  if (a > m / 2) return -static_cast<std::int64_t>(m - a);
  return static_cast<std::int64_t>(a);
}

}  // namespace h2cert
