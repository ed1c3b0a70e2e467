#include <gtest/gtest.h>

#include <set>

#include "h2cert/construction.hpp"
#include "h2cert/dependence.hpp"
#include "h2cert/rank_analysis.hpp"
#include "h2cert/series_text.hpp"

using namespace h2cert;

namespace {

long factorial(long k) { return k <= 1 ? 1 : k * factorial(k - 1); }

long pow3(long i) { return i == 0 ? 1 : 3 * pow3(i - 1); }

// F straight from the defining triple sum, without the generator code.
ZBiSeries triple_sum(std::size_t nx, std::size_t ny) {
  ZBiSeries f(RingTag::integers(), nx, ny);
  for (long i = 1; i < 12; ++i) {
    for (long j = 1; j < 12; ++j) {
      for (long k = 0; k <= std::min(i, j); ++k) {
        const long s = pow3(i) + (k + 1) * i;
        const long t = pow3(j) - (k + 1) * j;
        if (s >= 0 && t >= 0 && s < static_cast<long>(nx) && t < static_cast<long>(ny)) {
          f.add_at(static_cast<std::size_t>(s), static_cast<std::size_t>(t), Integer(factorial(k)));
        }
      }
    }
  }
  return f;
}

std::vector<Rational> family() { return {Rational(-1), Rational(0), Rational(1, 2), Rational(1)}; }

}  // namespace

TEST(Exponents, Examples) {
  const auto a = exponents(1, 0);
  EXPECT_EQ(a.s, 4);
  EXPECT_EQ(a.t, 2);
  const auto b = exponents(2, 1);
  EXPECT_EQ(b.s, 13);
  EXPECT_EQ(b.t, 5);
  const auto c = exponents(5, 5);
  EXPECT_EQ(c.s, 273);
  EXPECT_EQ(c.t, 213);
  EXPECT_THROW(exponents(0, 0), AlgebraError);
  EXPECT_THROW(exponents(3, -1), AlgebraError);
  EXPECT_THROW(exponents(39, 0), AlgebraError);
}

TEST(Exponents, SumAndDifferenceIdentities) {
  for (long i = 1; i <= 12; ++i) {
    for (long k = 0; k <= i; ++k) {
      const auto e = exponents(i, k);
      EXPECT_EQ(e.s + e.t, 2 * pow3(i));
      EXPECT_EQ(e.s - e.t, 2 * (k + 1) * i);
    }
  }
}

TEST(Exponents, OrderingChainFromFourOn) {
  for (long d = 4; d <= 10; ++d) {
    EXPECT_TRUE(exponent_chain_holds(d)) << d;
    for (long k = 0; k < d; ++k) EXPECT_EQ(exponents(d, k).t - exponents(d, k + 1).t, d);
    EXPECT_LE(exponents(d, 0).t + d, exponents(d, 0).s);
  }
}

TEST(Exponents, OrderingChainKnownToFailBelowFour) {
  // s_{d-1,d-1} < t_{d,d} fails for d = 2 (s=5 vs t=3) and d = 3 (s=15 vs t=15).
  EXPECT_FALSE(exponent_chain_holds(2));
  EXPECT_FALSE(exponent_chain_holds(3));
  EXPECT_EQ(exponents(1, 1).s, 5);
  EXPECT_EQ(exponents(2, 2).t, 3);
  EXPECT_EQ(exponents(2, 2).s, 15);
  EXPECT_EQ(exponents(3, 3).t, 15);
}

TEST(BuildF, Coefficients) {
  const auto f = build_F(300, 300);
  EXPECT_EQ(f.at(4, 2), 1);
  EXPECT_EQ(f.at(13, 5), 1);
  EXPECT_EQ(f.at(15, 3), 2);
  EXPECT_EQ(f, triple_sum(300, 300));
  EXPECT_THROW(build_F(3, 100), AlgebraError);
}

TEST(BuildF, AuditedCollisionsAreConsistent) {
  const auto audited = build_F_audited(800, 800);
  EXPECT_EQ(audited.f, build_F(800, 800));
  for (const auto& c : audited.collisions) EXPECT_GE(c.sources, 2u);
}

TEST(BuildF, IsTheSumOfItsSlices) {
  const auto f = build_F(300, 300);
  ZBiSeries sum(RingTag::integers(), 300, 300);
  for (long k = 0; k <= 5; ++k) {
    sum += outer_product(build_generator(GeneratorKind::G, k, 300), build_generator(GeneratorKind::HTilde, k, 300));
  }
  EXPECT_EQ(sum, f);
}

TEST(Generators, Examples) {
  EXPECT_EQ(build_generator(GeneratorKind::G, 0, 100), parse_series("x^4 + x^11 + x^30 + x^85", 100));
  EXPECT_EQ(build_generator(GeneratorKind::G, 1, 100), parse_series("x^5 + x^13 + x^33 + x^89", 100));
  EXPECT_TRUE(build_generator_mod(GeneratorKind::G, 2, 100, 2).is_zero());
  EXPECT_EQ(build_generator(GeneratorKind::G, 3, 300), parse_series("6*x^39 + 6*x^97 + 6*x^263", 300));
  EXPECT_EQ(build_generator(GeneratorKind::HTilde, 0, 100), parse_series("x^2 + x^7 + x^24 + x^77", 100));
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (long k = static_cast<long>(p); k < 7; ++k) EXPECT_TRUE(build_generator_mod(GeneratorKind::G, k, 400, p).is_zero());
  }
}

TEST(Divisibility, Examples) {
  const auto w = divisibility_witness(2, 300, 300);
  EXPECT_EQ(w.quotient.at(15, 3), 1);
  EXPECT_EQ(w.quotient.at(4, 2), 0);
  for (std::uint64_t p : {2, 3, 5}) {
    const auto v = divisibility_witness(p, 300, 300);
    ZBiSeries residual = build_F(300, 300);
    for (long k = 0; k < static_cast<long>(p); ++k) {
      residual -= outer_product(build_generator(GeneratorKind::G, k, 300), build_generator(GeneratorKind::HTilde, k, 300));
    }
    EXPECT_EQ(residual, v.quotient.scaled(Integer(static_cast<unsigned long>(p))));
  }
}

TEST(Divisibility, FiniteRankModP) {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto f = reduce_mod(build_F(300, 300), RingTag::prime_field(p));
    EXPECT_EQ(observed_rank(f).rank, p);
    EXPECT_EQ(recompose(f.ring(), 300, 300, finite_rank_decomposition(f, p)), f);
  }
}

TEST(Specker, Examples) {
  const auto r = specker_padic(3, 4, 10);
  EXPECT_TRUE(r.residual_divisible);
  EXPECT_TRUE(r.agrees_mod_pk);
  EXPECT_TRUE(r.symmetric);
  EXPECT_EQ(specker_padic(2, 2, 4).invariant_factors, (std::vector<Integer>{1, 2, 4, 8}));
  for (std::uint64_t p : {2, 3}) {
    for (unsigned k = 1; k <= 6; ++k) {
      const auto s = specker_padic(p, k, 8);
      EXPECT_TRUE(s.residual_divisible);
      EXPECT_TRUE(s.agrees_mod_pk);
      EXPECT_TRUE(s.factors_expected);
    }
  }
}

TEST(Enumeration, FirstValues) {
  EXPECT_EQ(enumerate_rationals(1), 0);
  EXPECT_EQ(enumerate_rationals(2), 1);
  EXPECT_EQ(enumerate_rationals(3), -1);
  EXPECT_EQ(enumerate_rationals(4), Rational(1, 2));
  EXPECT_EQ(enumerate_rationals(5), Rational(-1, 2));
  EXPECT_EQ(enumerate_rationals(6), 2);
  EXPECT_THROW(enumerate_rationals(0), AlgebraError);
}

TEST(Enumeration, InjectiveOnTenThousand) {
  RationalEnumeration e;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t n = 1; n <= 10000; ++n) {
    const Rational& q = e.at(n);
    EXPECT_TRUE(seen.emplace(q.get_num().get_str(), q.get_den().get_str()).second) << n;
  }
}

TEST(Enumeration, HitsEverySmallRational) {
  RationalEnumeration e;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t n = 1; n <= 4000; ++n) seen.emplace(e.at(n).get_num().get_str(), e.at(n).get_den().get_str());
  for (long den = 1; den <= 12; ++den) {
    for (long num = -12; num <= 12; ++num) {
      Rational q(num, den);
      q.canonicalize();
      EXPECT_TRUE(seen.count({q.get_num().get_str(), q.get_den().get_str()})) << num << "/" << den;
    }
  }
}

TEST(Continuum, Examples) {
  EXPECT_EQ(continuum_member(Rational(0), 64), parse_series("x^8 + x^32", 64));
  EXPECT_TRUE(continuum_member(Rational(-1), 64).is_zero());
  for (std::size_t n : {64, 512, 4096}) {
    const auto half = continuum_support(Rational(1, 2), n);
    const auto one = continuum_support(Rational(1), n);
    EXPECT_TRUE(std::includes(one.begin(), one.end(), half.begin(), half.end()));
  }
}

TEST(Continuum, SupportsAreMonotone) {
  RationalEnumeration e;
  for (std::size_t a = 1; a <= 40; ++a) {
    for (std::size_t b = 1; b <= 40; ++b) {
      const Rational ra = e.at(a);
      const Rational rb = e.at(b);
      if (!(ra < rb)) continue;
      const auto sa = continuum_support(ra, 1u << 12);
      const auto sb = continuum_support(rb, 1u << 12);
      EXPECT_TRUE(std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
    }
  }
}

TEST(Continuum, DifferencesAreIsolated) {
  for (std::size_t n : {1u << 8, 1u << 10, 1u << 12}) {
    for (const auto& c : isolation_certificates(family(), n, 4)) {
      EXPECT_TRUE(c.holds) << "r=" << c.r.get_str() << " N=" << n;
      ASSERT_TRUE(c.m.has_value());
      EXPECT_GE(c.radius, 4u);
      // Only the matching difference is nonzero at m.
      const auto hs = continuum_differences(family(), n);
      for (std::size_t l = 0; l < hs.size(); ++l) {
        const bool own = family()[l] == c.r;
        EXPECT_EQ(hs[l][*c.m] != 0, own);
      }
    }
  }
}

TEST(Continuum, FamilyIsIndependent) {
  for (std::uint64_t p : {2, 3}) {
    std::vector<LaurentTrunc> g;
    for (const auto& r : family()) g.push_back(LaurentTrunc::from_series(reduce_mod(continuum_member(r, 4096), RingTag::prime_field(p))));
    EXPECT_FALSE(rational_dependence(g, 3, 4096).found());
    // Adding a repeated member makes the family dependent.
    g.push_back(g[1]);
    EXPECT_TRUE(rational_dependence(g, 3, 4096).found());
  }
}
