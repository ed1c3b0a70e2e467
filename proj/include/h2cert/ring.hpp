#pragma once

#include <cstdint>
#include <string>

#include "h2cert/integer.hpp"

namespace h2cert {

/// Canonical residue in [0, modulus). Used for both F_p and Z/p^e.
using Residue = std::uint64_t;

enum class RingKind { IntZ, Fp, ZmodPE, RatFuncFp };

bool is_prime(std::uint64_t n) noexcept;

/// Names a coefficient ring. Primes are checked by trial division when the
/// tag is built, so a RingTag in hand always describes a valid ring.
class RingTag {
 public:
  static RingTag integers() noexcept { return RingTag(RingKind::IntZ, 0, 0); }
  static RingTag prime_field(std::uint64_t p);
  static RingTag prime_power(std::uint64_t p, unsigned e);
  static RingTag rational_functions(std::uint64_t p);

  RingKind kind() const noexcept { return kind_; }
  std::uint64_t prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return e_; }
  // p for Fp, p^e for ZmodPE, 0 otherwise.
  std::uint64_t modulus() const noexcept { return modulus_; }

  bool is_modular() const noexcept { return kind_ == RingKind::Fp || kind_ == RingKind::ZmodPE; }

  std::string name() const;

  friend bool operator==(const RingTag&, const RingTag&) = default;

 private:
  RingTag(RingKind kind, std::uint64_t p, unsigned e) noexcept;

  RingKind kind_;
  std::uint64_t p_;
  unsigned e_;
  std::uint64_t modulus_;
};

inline Residue add_mod(Residue a, Residue b, std::uint64_t m) noexcept {
  Residue s = a + b;
  return s >= m ? s - m : s;
}
inline Residue sub_mod(Residue a, Residue b, std::uint64_t m) noexcept {
  return a >= b ? a - b : a + (m - b);
}
inline Residue neg_mod(Residue a, std::uint64_t m) noexcept { return a == 0 ? 0 : m - a; }
inline Residue mul_mod(Residue a, Residue b, std::uint64_t m) noexcept {
  return static_cast<Residue>((static_cast<unsigned __int128>(a) * b) % m);
}

Residue reduce(const Integer& value, std::uint64_t m);
Residue reduce(std::int64_t value, std::uint64_t m) noexcept;

// Throws NotAUnit when gcd(a, m) != 1.
Residue inverse_mod(Residue a, std::uint64_t m);

/// Inverse of `a` in the ring named by `tag`. Over Z only +-1 invert; any
/// other element there is reported as UnsupportedRing.
Integer modular_inverse(const Integer& a, const RingTag& tag);

// Residue centred into (-m/2, m/2], for display.
std::int64_t centred(Residue a, std::uint64_t m) noexcept;

}  // namespace h2cert
