#include <gtest/gtest.h>

#include "generators.hpp"
#include "h2cert/construction.hpp"
#include "h2cert/rank_analysis.hpp"
#include "h2cert/series_text.hpp"

using namespace h2cert;

namespace {

const RingTag Z = RingTag::integers();

ZBiSeries diagonal(std::size_t n) {
  ZBiSeries f(Z, n, n);
  for (std::size_t i = 0; i < n; ++i) f.set(i, i, 1);
  return f;
}

// k-slices g_k(x) h~_k(y) with their first monomial inside the window.
std::size_t visible_slices(std::uint64_t p, std::size_t nx, std::size_t ny) {
  std::size_t count = 0;
  for (long k = 0; k < static_cast<long>(p); ++k) {
    const auto e = exponents(std::max(k, 1L), k);
    if (e.s < static_cast<long>(nx) && e.t < static_cast<long>(ny)) ++count;
  }
  return count;
}

ZBiSeries window(const ZBiSeries& f, std::size_t nx, std::size_t ny) {
  ZBiSeries out(Z, nx, ny);
  for (std::size_t b = 0; b < ny; ++b) {
    for (std::size_t a = 0; a < nx; ++a) out.set(a, b, f.at(a, b));
  }
  return out;
}

}  // namespace

TEST(CoefficientMatrix, Examples) {
  const auto m = coefficient_matrix(parse_bi_series("x*y", 2, 2));
  EXPECT_EQ(m(0, 0), 0);
  EXPECT_EQ(m(0, 1), 0);
  EXPECT_EQ(m(1, 0), 0);
  EXPECT_EQ(m(1, 1), 1);
  const auto row = coefficient_matrix(parse_bi_series("1 + 3*x^2", 4, 1));
  ASSERT_EQ(row.rows(), 1u);
  EXPECT_EQ(row(0, 0), 1);
  EXPECT_EQ(row(0, 2), 3);
  const auto id = coefficient_matrix(diagonal(3));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id(i, j), i == j ? 1 : 0);
  }
}

TEST(ObservedRank, Examples) {
  testgen::Engine rng(41);
  auto f = testgen::zseries(rng, 6);
  auto g = testgen::zseries(rng, 5);
  f.set(0, 1);
  g.set(1, 2);
  EXPECT_EQ(observed_rank(outer_product(f, g)).rank, 1u);
  EXPECT_EQ(observed_rank(diagonal(7)).rank, 7u);
  EXPECT_EQ(observed_rank(reduce_mod(diagonal(7), RingTag::prime_field(3))).rank, 7u);
  const auto r = observed_rank(reduce_mod(build_F(250, 250), RingTag::prime_field(2)));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_TRUE(r.stabilized);
  EXPECT_THROW(observed_rank(reduce_mod(diagonal(3), RingTag::prime_power(2, 2))), AlgebraError);
}

TEST(ObservedRank, IntegerInvariantFactors) {
  const auto r = observed_rank(parse_bi_series("2*x*y + 6*x^2*y^2", 3, 3));
  EXPECT_EQ(r.rank, 2u);
  ASSERT_TRUE(r.invariant_factors.has_value());
  EXPECT_EQ(*r.invariant_factors, (std::vector<Integer>{2, 6}));
}

TEST(ObservedRank, TorsionFreeShadow) {
  testgen::Engine rng(42);
  for (int s = 0; s < 100; ++s) {
    const auto f = s % 2 ? testgen::zbiseries(rng, 40, 40, 3, 0.05) : testgen::low_rank(rng, 40, 40, 1 + s % 6);
    const auto base = observed_rank(f);
    for (long n : {2, 3, 6}) {
      const auto scaled = observed_rank(f.scaled(Integer(n)));
      EXPECT_EQ(scaled.rank, base.rank);
      std::vector<Integer> expected = *base.invariant_factors;
      for (auto& d : expected) d *= n;
      EXPECT_EQ(*scaled.invariant_factors, expected);
    }
  }
}

TEST(ObservedRank, MonotoneInTruncation) {
  testgen::Engine rng(43);
  for (int s = 0; s < 50; ++s) {
    const auto f = testgen::low_rank(rng, 14, 14, 1 + s % 8);
    std::size_t previous = 0;
    for (std::size_t n = 2; n <= 14; n += 3) {
      const auto a = observed_rank(window(f, n, 14)).rank;
      const auto b = observed_rank(window(f, 14, n)).rank;
      const auto c = observed_rank(window(f, n, n)).rank;
      EXPECT_LE(c, a);
      EXPECT_LE(c, b);
      EXPECT_GE(c, previous);
      previous = c;
    }
  }
}

TEST(ObservedRank, ExplicitSeriesMatchesVisibleSlices) {
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::size_t n : {20, 60, 150, 300}) {
      const auto r = observed_rank(reduce_mod(build_F(n, n), RingTag::prime_field(p)));
      EXPECT_EQ(r.rank, visible_slices(p, n, n)) << "p=" << p << " N=" << n;
    }
  }
}

TEST(Decomposition, Examples) {
  const RingTag f2 = RingTag::prime_field(2);
  const ModSeries x = reduce_mod(parse_series("x", 6), f2);
  const ModSeries g = reduce_mod(parse_series("1 + x^2 + x^3", 5), f2);
  const auto one = finite_rank_decomposition(outer_product(x, g), 1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].first, x);
  EXPECT_EQ(one[0].second, g);
  EXPECT_TRUE(finite_rank_decomposition(ModBiSeries(f2, 4, 4), 0).empty());
  const auto f = reduce_mod(build_F(100, 100), f2);
  const auto pairs = finite_rank_decomposition(f, 2);
  EXPECT_EQ(pairs.size(), 2u);
  EXPECT_EQ(recompose(f2, 100, 100, pairs), f);
  EXPECT_THROW(finite_rank_decomposition(f, 3), AlgebraError);
}

TEST(Decomposition, AlwaysMultipliesBack) {
  testgen::Engine rng(44);
  for (int s = 0; s < 100; ++s) {
    const RingTag ring = RingTag::prime_field(std::array<std::uint64_t, 3>{2, 5, 7}[s % 3]);
    const auto f = reduce_mod(testgen::low_rank(rng, 12, 10, s % 5), ring);
    const auto r = observed_rank(f).rank;
    EXPECT_LE(r, static_cast<std::size_t>(s % 5));
    EXPECT_EQ(recompose(ring, 12, 10, finite_rank_decomposition(f, r)), f);
  }
}
