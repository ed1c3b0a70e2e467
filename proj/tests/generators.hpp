#pragma once

#include <random>

#include "h2cert/bi_series.hpp"
#include "h2cert/laurent.hpp"
#include "h2cert/matrix.hpp"
#include "h2cert/ratfunc.hpp"
#include "h2cert/series.hpp"

namespace h2cert::testgen {

// Small seeded generators for property tests. Every draw goes through the
// caller's engine, so a failing seed reproduces exactly.
using Engine = std::mt19937_64;

inline long uniform(Engine& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Integer small_integer(Engine& rng, long bound = 9) { return Integer(uniform(rng, -bound, bound)); }

inline Residue residue(Engine& rng, std::uint64_t m) { return std::uniform_int_distribution<Residue>(0, m - 1)(rng); }

inline PolyFp poly(Engine& rng, std::uint64_t p, long max_degree) {
  std::vector<Residue> c(static_cast<std::size_t>(uniform(rng, 0, max_degree) + 1));
  for (auto& x : c) x = residue(rng, p);
  return PolyFp(p, std::move(c));
}

inline PolyFp nonzero_poly(Engine& rng, std::uint64_t p, long max_degree) {
  PolyFp out = poly(rng, p, max_degree);
  while (out.is_zero()) out = poly(rng, p, max_degree);
  return out;
}

inline RationalFunction ratfunc(Engine& rng, std::uint64_t p, long max_degree = 3) {
  return ratfunc_normalize(poly(rng, p, max_degree), nonzero_poly(rng, p, max_degree));
}

inline ZSeries zseries(Engine& rng, std::size_t order, long bound = 9) {
  std::vector<Integer> c(order);
  for (auto& x : c) x = small_integer(rng, bound);
  return ZSeries(RingTag::integers(), std::move(c));
}

inline ModSeries modseries(Engine& rng, const RingTag& ring, std::size_t order) {
  std::vector<Residue> c(order);
  for (auto& x : c) x = residue(rng, ring.modulus());
  return ModSeries(ring, std::move(c));
}

inline RatSeries ratseries(Engine& rng, std::uint64_t p, std::size_t order) {
  std::vector<RationalFunction> c;
  for (std::size_t i = 0; i < order; ++i) c.push_back(ratfunc(rng, p, 2));
  return RatSeries(RingTag::rational_functions(p), std::move(c));
}

// Integer series with constant term +-1.
inline ZSeries zunit(Engine& rng, std::size_t order) {
  ZSeries f = zseries(rng, order);
  f.set(0, Integer(rng() % 2 ? 1 : -1));
  return f;
}

inline ZBiSeries zbiseries(Engine& rng, std::size_t nx, std::size_t ny, long bound = 5, double density = 1.0) {
  ZBiSeries f(RingTag::integers(), nx, ny);
  std::bernoulli_distribution keep(density);
  for (std::size_t b = 0; b < ny; ++b) {
    for (std::size_t a = 0; a < nx; ++a) {
      if (keep(rng)) f.set(a, b, small_integer(rng, bound));
    }
  }
  return f;
}

// Sum of `rank` outer products of random integer series.
inline ZBiSeries low_rank(Engine& rng, std::size_t nx, std::size_t ny, std::size_t rank) {
  ZBiSeries f(RingTag::integers(), nx, ny);
  for (std::size_t s = 0; s < rank; ++s) f += outer_product(zseries(rng, nx, 3), zseries(rng, ny, 3));
  return f;
}

inline BiPoly bipoly(Engine& rng, std::size_t terms, std::size_t max_exp) {
  BiPoly out;
  for (std::size_t i = 0; i < terms; ++i) {
    out.push_back({small_integer(rng, 4), static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_exp))),
                   static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_exp)))});
  }
  return out;
}

inline LaurentPoly laurent_poly(Engine& rng, std::size_t terms, long span) {
  LaurentPoly q;
  for (std::size_t i = 0; i < terms; ++i) q.add_term(small_integer(rng, 4), uniform(rng, -span, span));
  return q;
}

inline IntMatrix int_matrix(Engine& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(RingTag::integers(), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_integer(rng, bound);
  }
  return m;
}

inline FpMatrix fp_matrix(Engine& rng, std::uint64_t p, std::size_t rows, std::size_t cols) {
  FpMatrix m(RingTag::prime_field(p), rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (auto& x : m.row(i)) x = rng() % 3 == 0 ? 0 : residue(rng, p);
  }
  return m;
}

inline LaurentTrunc laurent(Engine& rng, std::uint64_t p, long order, long max_low = 0) {
  const long low = uniform(rng, 0, max_low);
  std::vector<Residue> c(static_cast<std::size_t>(order - low));
  for (auto& x : c) x = residue(rng, p);
  return LaurentTrunc(p, low, order, std::move(c));
}

}  // namespace h2cert::testgen
