#pragma once

#include <vector>

#include "h2cert/dependence.hpp"
#include "h2cert/homology.hpp"
#include "h2cert/matrix.hpp"

// Deliberately naive reference computations. None of them reuse the
// elimination or presentation code they are used to check.
namespace h2cert::oracle {

/// d_k = gcd of all k x k minors; factors d_k / d_{k-1}.
std::vector<Integer> gcd_of_minors_factors(const IntMatrix& m);

/// Invariant factors by alternating row and column Hermite reduction, then
/// gcd/lcm repair of the diagonal.
std::vector<Integer> alternating_hnf_factors(const IntMatrix& m);

/// Rank over F_p by plain forward elimination on a copy.
std::size_t rank_by_elimination(const FpMatrix& m);

/// Tries every tuple of polynomials of degree <= D over F_p.
bool exhaustive_dependence(const std::vector<LaurentTrunc>& g, long degree_bound, long truncation);

/// Orbits of (a, b) -> (a+1, b+1) on pairs a < b < W, via union-find.
std::size_t shift_orbit_count(std::size_t w);

/// Quotient of the truncated x,y-monomial lattice by (x+y+xy) multiples and
/// symmetric elements, built from sparse polynomial products.
struct QuotientOracle {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};
QuotientOracle h2hat_brute_force(std::size_t n);

}  // namespace h2cert::oracle
