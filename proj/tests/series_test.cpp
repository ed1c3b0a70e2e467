#include <gtest/gtest.h>

#include "generators.hpp"
#include "h2cert/bi_series.hpp"
#include "h2cert/construction.hpp"
#include "h2cert/series.hpp"
#include "h2cert/series_text.hpp"

using namespace h2cert;

namespace {

const RingTag Z = RingTag::integers();

ZSeries zs(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return ZSeries(Z, std::move(v));
}

// Schoolbook convolution written independently of mul_trunc.
ZSeries convolve(const ZSeries& a, const ZSeries& b) {
  const std::size_t n = a.order();
  std::vector<Integer> out(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i <= k; ++i) out[k] += a[i] * b[k - i];
  }
  return ZSeries(Z, std::move(out));
}

// Brute-force product of a bivariate series with a polynomial.
ZBiSeries poly_times(const ZBiSeries& f, const BiPoly& poly) {
  ZBiSeries out(Z, f.nx(), f.ny());
  for (std::size_t b = 0; b < f.ny(); ++b) {
    for (std::size_t a = 0; a < f.nx(); ++a) {
      for (const auto& t : poly) {
        if (a + t.x_exp < f.nx() && b + t.y_exp < f.ny()) out.add_at(a + t.x_exp, b + t.y_exp, f.at(a, b) * t.coeff);
      }
    }
  }
  return out;
}

template <class S>
void check_ring_axioms(const S& a, const S& b, const S& c) {
  EXPECT_EQ(mul_trunc(mul_trunc(a, b), c), mul_trunc(a, mul_trunc(b, c)));
  EXPECT_EQ(mul_trunc(a, b), mul_trunc(b, a));
  EXPECT_EQ(mul_trunc(a, b + c), mul_trunc(a, b) + mul_trunc(a, c));
}

}  // namespace

TEST(MulTrunc, Examples) {
  EXPECT_EQ(mul_trunc(zs({1, 1, 0, 0}), zs({1, -1, 1, -1})), ZSeries::one(Z, 4));
  const ZSeries geo = zs({1, 1, 1, 1, 1});
  EXPECT_EQ(mul_trunc(geo, geo), zs({1, 2, 3, 4, 5}));
  EXPECT_EQ(mul_trunc(geo, geo), convolve(geo, geo));
  EXPECT_EQ(mul_trunc(ZSeries(Z, 5), geo), ZSeries(Z, 5));
}

TEST(MulTrunc, RejectsMixedOperands) {
  EXPECT_THROW(mul_trunc(zs({1, 1}), zs({1, 1, 1})), AlgebraError);
  const ModSeries a(RingTag::prime_field(3), 3);
  const ModSeries b(RingTag::prime_field(5), 3);
  EXPECT_THROW(mul_trunc(a, b), AlgebraError);
}

TEST(MulTrunc, MatchesSchoolbookConvolution) {
  testgen::Engine rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto a = testgen::zseries(rng, 12);
    const auto b = testgen::zseries(rng, 12);
    EXPECT_EQ(mul_trunc(a, b), convolve(a, b));
  }
}

TEST(MulTrunc, RingAxiomsPerRing) {
  testgen::Engine rng(22);
  for (int i = 0; i < 500; ++i) check_ring_axioms(testgen::zseries(rng, 8), testgen::zseries(rng, 8), testgen::zseries(rng, 8));
  for (const auto& ring : {RingTag::prime_field(2), RingTag::prime_field(5), RingTag::prime_power(3, 3)}) {
    for (int i = 0; i < 500; ++i) {
      check_ring_axioms(testgen::modseries(rng, ring, 8), testgen::modseries(rng, ring, 8), testgen::modseries(rng, ring, 8));
    }
  }
  for (int i = 0; i < 500; ++i) {
    check_ring_axioms(testgen::ratseries(rng, 3, 4), testgen::ratseries(rng, 3, 4), testgen::ratseries(rng, 3, 4));
  }
}

TEST(InvertUnit, Examples) {
  EXPECT_EQ(invert_unit(zs({1, 1, 0})), zs({1, -1, 1}));
  EXPECT_THROW(invert_unit(zs({2, 1})), AlgebraError);
  // 1 - alpha x over F_7(x) with alpha = x.
  const std::uint64_t p = 7;
  const RingTag K = RingTag::rational_functions(p);
  const RationalFunction alpha(PolyFp(p, {0, 1}));
  RatSeries f(K, 4);
  f.set(0, RationalFunction::one(p));
  f.set(1, -alpha);
  const RatSeries inv = invert_unit(f);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(inv[i], alpha.pow(static_cast<int>(i)));
}

TEST(InvertUnit, TwoSidedInverse) {
  testgen::Engine rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto f = testgen::zunit(rng, 10);
    const auto g = invert_unit(f);
    EXPECT_EQ(mul_trunc(f, g), ZSeries::one(Z, 10));
    EXPECT_EQ(mul_trunc(g, f), ZSeries::one(Z, 10));
  }
  for (const auto& ring : {RingTag::prime_field(7), RingTag::prime_power(2, 6)}) {
    for (int i = 0; i < 200; ++i) {
      auto f = testgen::modseries(rng, ring, 10);
      if (f[0] % ring.prime() == 0) f.set(0, 1);
      EXPECT_EQ(mul_trunc(f, invert_unit(f)), ModSeries::one(ring, 10));
    }
  }
}

TEST(PhiMap, Examples) {
  EXPECT_EQ(phi_map(LaurentPoly::monomial(1, 1), 4), zs({1, 1, 0, 0}));
  EXPECT_EQ(phi_map(LaurentPoly::monomial(1, -1), 3), zs({1, -1, 1}));
  EXPECT_EQ(phi_map(LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, 0), 5), zs({0, 1, 0, 0, 0}));
  EXPECT_EQ(phi_map(parse_laurent_poly("t^2"), 4), zs({1, 2, 1, 0}));
}

TEST(PhiMap, RingHomomorphism) {
  testgen::Engine rng(24);
  for (int i = 0; i < 100; ++i) {
    const auto q1 = testgen::laurent_poly(rng, 3, 4);
    const auto q2 = testgen::laurent_poly(rng, 3, 4);
    EXPECT_EQ(phi_map(q1 * q2, 12), mul_trunc(phi_map(q1, 12), phi_map(q2, 12)));
    EXPECT_EQ(phi_map(q1 + q2, 12), phi_map(q1, 12) + phi_map(q2, 12));
  }
}

TEST(Antisymmetrize, Examples) {
  EXPECT_EQ(antisymmetrize(parse_bi_series("x", 3, 3)), parse_bi_series("x - y", 3, 3));
  EXPECT_EQ(antisymmetrize(parse_bi_series("x*y + x + y", 3, 3)), ZBiSeries(Z, 3, 3));
  EXPECT_EQ(antisymmetrize(parse_bi_series("x^2*y", 3, 3)), parse_bi_series("x^2*y - x*y^2", 3, 3));
  EXPECT_THROW(antisymmetrize(ZBiSeries(Z, 3, 4)), AlgebraError);
}

TEST(Antisymmetrize, Identities) {
  testgen::Engine rng(25);
  for (int i = 0; i < 200; ++i) {
    const auto f = testgen::zbiseries(rng, 7, 7);
    const auto a = antisymmetrize(f);
    ZBiSeries twice = a;
    twice += a;
    EXPECT_EQ(antisymmetrize(a), twice);
    EXPECT_EQ(antisymmetrize(transpose(f)), ZBiSeries(Z, 7, 7) - a);
    EXPECT_EQ(transpose(transpose(f)), f);
  }
}

TEST(ReduceMod, Examples) {
  EXPECT_EQ(reduce_mod(zs({0, 2, 3}), RingTag::prime_field(2)), ModSeries(RingTag::prime_field(2), std::vector<Residue>{0, 0, 1}));
  EXPECT_TRUE(reduce_mod(build_generator(GeneratorKind::G, 2, 100), RingTag::prime_field(2)) ==
              ModSeries(RingTag::prime_field(2), 100));
  EXPECT_EQ(reduce_mod(zs({0, 6}), RingTag::prime_power(3, 2)), ModSeries(RingTag::prime_power(3, 2), std::vector<Residue>{0, 6}));
  EXPECT_EQ(reduce_mod(zs({-1}), RingTag::prime_field(5)), ModSeries(RingTag::prime_field(5), std::vector<Residue>{4}));
}

TEST(ReduceMod, IsAHomomorphism) {
  testgen::Engine rng(26);
  const std::vector<RingTag> rings{RingTag::prime_field(2), RingTag::prime_field(5), RingTag::prime_power(3, 2)};
  for (int i = 0; i < 200; ++i) {
    const RingTag& ring = rings[static_cast<std::size_t>(i) % rings.size()];
    const auto a = testgen::zseries(rng, 10, 40);
    const auto b = testgen::zseries(rng, 10, 40);
    EXPECT_EQ(reduce_mod(mul_trunc(a, b), ring), mul_trunc(reduce_mod(a, ring), reduce_mod(b, ring)));
    const auto f = testgen::zbiseries(rng, 6, 5, 20);
    const auto poly = testgen::bipoly(rng, 3, 3);
    EXPECT_EQ(reduce_mod(mul_by_poly(f, poly), ring), mul_by_poly(reduce_mod(f, ring), poly));
  }
}

TEST(MulByPoly, Examples) {
  const BiPoly lamplighter = parse_bi_poly("x + y + x*y");
  EXPECT_EQ(mul_by_poly(parse_bi_series("1", 3, 3), lamplighter), parse_bi_series("x + y + x*y", 3, 3));
  EXPECT_EQ(mul_by_poly(parse_bi_series("y", 3, 3), parse_bi_poly("x")), parse_bi_series("x*y", 3, 3));
  // (1 + y + y^2)(x + y + xy) at (Nx, Ny) = (2, 3); the y^2 coefficient is
  // 1 + 2x (from y*y and xy*y plus x*y^2), matching the brute-force product.
  const auto f = parse_bi_series("1 + y + y^2", 2, 3);
  const auto expected = parse_bi_series("x + y + 2*x*y + y^2 + 2*x*y^2", 2, 3);
  EXPECT_EQ(mul_by_poly(f, lamplighter), expected);
  EXPECT_EQ(poly_times(f, lamplighter), expected);
}

TEST(MulByPoly, MatchesBruteForce) {
  testgen::Engine rng(27);
  for (int i = 0; i < 200; ++i) {
    const auto f = testgen::zbiseries(rng, 6, 7);
    const auto poly = testgen::bipoly(rng, 4, 4);
    EXPECT_EQ(mul_by_poly(f, poly), poly_times(f, poly));
  }
}

TEST(SeriesText, RoundTrip) {
  testgen::Engine rng(28);
  for (int i = 0; i < 100; ++i) {
    const auto f = testgen::zbiseries(rng, 6, 6, 5, 0.3);
    EXPECT_EQ(parse_bi_series(format_bi_series(f), 6, 6), f);
    const auto g = testgen::zseries(rng, 9);
    EXPECT_EQ(parse_series(format_series(g), 9), g);
  }
}

TEST(SeriesText, RejectsGarbage) {
  EXPECT_THROW(parse_series("1 + z", 4), AlgebraError);
  EXPECT_THROW(parse_series("x^-1", 4), AlgebraError);
  EXPECT_THROW(parse_bi_series("x y", 4, 4), AlgebraError);
  EXPECT_THROW(parse_series("", 4), AlgebraError);
  EXPECT_NO_THROW(parse_laurent_poly("t^-2 + 3*t"));
}

TEST(OuterProduct, Bilinear) {
  testgen::Engine rng(29);
  for (int i = 0; i < 50; ++i) {
    const auto f = testgen::zseries(rng, 5);
    const auto g = testgen::zseries(rng, 5);
    const auto h = testgen::zseries(rng, 5);
    EXPECT_EQ(outer_product(f + g, h), outer_product(f, h) + outer_product(g, h));
    EXPECT_EQ(outer_product(f, g), transpose(outer_product(g, f)));
  }
}
