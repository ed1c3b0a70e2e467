#include <gtest/gtest.h>

#include "generators.hpp"
#include "h2cert/error.hpp"
#include "h2cert/ratfunc.hpp"
#include "h2cert/ring.hpp"

using namespace h2cert;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no AlgebraError thrown";
  return ErrorCode::ParseError;
}

PolyFp P(std::uint64_t p, std::vector<Residue> c) { return PolyFp(p, std::move(c)); }

}  // namespace

TEST(RingTag, RejectsComposites) {
  EXPECT_EQ(code_of([] { RingTag::prime_field(4); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { RingTag::prime_power(9, 2); }), ErrorCode::NotPrime);
  EXPECT_EQ(code_of([] { RingTag::rational_functions(1); }), ErrorCode::NotPrime);
  EXPECT_EQ(RingTag::prime_power(3, 2).modulus(), 9u);
  EXPECT_EQ(RingTag::prime_field(7).modulus(), 7u);
}

TEST(RingTag, PrimalityAgreesWithSieve) {
  std::vector<bool> composite(2000, false);
  for (std::size_t i = 2; i < composite.size(); ++i) {
    for (std::size_t j = 2 * i; j < composite.size(); j += i) composite[j] = true;
    EXPECT_EQ(is_prime(i), !composite[i]) << i;
  }
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(ModularInverse, Examples) {
  EXPECT_EQ(modular_inverse(2, RingTag::prime_field(5)), 3);
  EXPECT_EQ(modular_inverse(1, RingTag::prime_field(13)), 1);
  EXPECT_EQ(code_of([] { modular_inverse(0, RingTag::prime_field(5)); }), ErrorCode::NotAUnit);
  EXPECT_EQ(code_of([] { modular_inverse(3, RingTag::prime_power(3, 2)); }), ErrorCode::NotAUnit);
  EXPECT_EQ(modular_inverse(-1, RingTag::integers()), -1);
  EXPECT_EQ(code_of([] { modular_inverse(2, RingTag::integers()); }), ErrorCode::UnsupportedRing);
}

TEST(ModularInverse, InvolutionOnUnits) {
  testgen::Engine rng(11);
  const std::vector<RingTag> rings{RingTag::prime_field(2),     RingTag::prime_field(7),  RingTag::prime_field(101),
                                   RingTag::prime_power(2, 5),  RingTag::prime_power(3, 4), RingTag::prime_power(7, 3)};
  for (const auto& ring : rings) {
    for (int i = 0; i < 200; ++i) {
      const Integer a = Integer(static_cast<unsigned long>(testgen::residue(rng, ring.modulus())));
      if (gcd(a, Integer(static_cast<unsigned long>(ring.prime()))) != 1) continue;
      const Integer inv = modular_inverse(a, ring);
      EXPECT_EQ(modular_inverse(inv, ring), a) << ring.name();
      EXPECT_EQ(Integer(a * inv) % Integer(static_cast<unsigned long>(ring.modulus())), 1) << ring.name();
    }
  }
}

TEST(RatFunc, NormalizeExamples) {
  // (x^2 - 1) / (x - 1) over F_5.
  const auto r = ratfunc_normalize(P(5, {4, 0, 1}), P(5, {4, 1}));
  EXPECT_EQ(r.num(), P(5, {1, 1}));
  EXPECT_EQ(r.den(), P(5, {1}));
  const auto z = ratfunc_normalize(P(5, {}), P(5, {2, 0, 0, 1}));
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), P(5, {1}));
  EXPECT_EQ(code_of([] { ratfunc_normalize(P(5, {0, 1}), P(5, {})); }), ErrorCode::ZeroDenominator);
  EXPECT_EQ(code_of([] { ratfunc_normalize(P(5, {0, 1}), P(3, {1})); }), ErrorCode::PrimeMismatch);
}

TEST(RatFunc, NormalizedFormIsReducedAndMonic) {
  testgen::Engine rng(12);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 200; ++i) {
      const PolyFp num = testgen::poly(rng, p, 4);
      const PolyFp den = testgen::nonzero_poly(rng, p, 4);
      const auto r = ratfunc_normalize(num, den);
      EXPECT_EQ(r.den().leading(), 1u);
      if (!r.is_zero()) EXPECT_EQ(gcd(r.num(), r.den()), PolyFp::constant(p, 1));
      // Same element: num * den' = num' * den.
      EXPECT_EQ(num * r.den(), r.num() * den);
      // Idempotent.
      EXPECT_EQ(ratfunc_normalize(r.num(), r.den()), r);
    }
  }
}

TEST(RatFunc, FieldAxioms) {
  testgen::Engine rng(13);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto one = RationalFunction::one(p);
    const auto zero = RationalFunction::zero(p);
    for (int i = 0; i < 200; ++i) {
      const auto a = testgen::ratfunc(rng, p);
      const auto b = testgen::ratfunc(rng, p);
      const auto c = testgen::ratfunc(rng, p);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a + zero, a);
      EXPECT_EQ(a * one, a);
      EXPECT_EQ(a + (-a), zero);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), one);
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(RatFunc, PowersAndZeroInverse) {
  const auto x = RationalFunction(P(5, {0, 1}));
  EXPECT_EQ(x.pow(3), RationalFunction(P(5, {0, 0, 0, 1})));
  EXPECT_EQ(x.pow(-2) * x.pow(2), RationalFunction::one(5));
  EXPECT_EQ(code_of([] { RationalFunction::zero(5).inverse(); }), ErrorCode::ZeroDenominator);
}

TEST(PolyFpOps, DivmodReconstructs) {
  testgen::Engine rng(14);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 100; ++i) {
      const PolyFp a = testgen::poly(rng, p, 6);
      const PolyFp b = testgen::nonzero_poly(rng, p, 3);
      const auto [q, r] = divmod(a, b);
      EXPECT_EQ(q * b + r, a);
      EXPECT_LT(r.degree(), b.degree());
    }
  }
}
