#pragma once

#include <cstddef>
#include <vector>

#include "h2cert/laurent.hpp"
#include "h2cert/poly_fp.hpp"

namespace h2cert {

/// Outcome of a bounded search for r_1..r_n in F_p[x], deg r_i <= D, with
/// sum r_i g_i = 0 mod x^N. An empty relation means none exists at (D, N);
/// nothing is claimed beyond those bounds.
struct DependenceWitness {
  std::uint64_t p = 0;
  std::size_t count = 0;
  long degree_bound = 0;
  long truncation = 0;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::vector<PolyFp> relation;

  bool found() const noexcept { return !relation.empty(); }
};

/// Smallest truncation the solver accepts, and the default it picks when
/// the caller has no opinion: 2 (D+1) n + spread above the lowest valuation.
long minimum_truncation(const std::vector<LaurentTrunc>& g, long degree_bound);
long default_truncation(const std::vector<LaurentTrunc>& g, long degree_bound);

DependenceWitness rational_dependence(const std::vector<LaurentTrunc>& g, long degree_bound, long truncation);

/// Recomputes sum r_i g_i mod x^N directly. Absence records re-run the solver.
bool verify_dependence(const std::vector<LaurentTrunc>& g, const DependenceWitness& w);

}  // namespace h2cert
