#pragma once

#include <vector>

#include "h2cert/matrix.hpp"

namespace h2cert {

/// Invariant factors d_1 | d_2 | ... | d_rank (all positive) of an integer
/// matrix. The cokernel of M acting on row vectors is
/// Z^(cols - rank) + sum Z/d_i.
struct SmithForm {
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;

  // Invariant factors greater than one.
  std::vector<Integer> torsion() const;
};

/// Unimodular left * M * right == diagonal.
struct SmithDecomposition {
  SmithForm form;
  IntMatrix left;
  IntMatrix right;
  IntMatrix diagonal;
};

/// Pivot-to-gcd reduction with smallest-magnitude pivots. Debug builds
/// also track the transforms and check left * M * right.
SmithForm smith_normal_form(const IntMatrix& m);
SmithDecomposition smith_with_transforms(const IntMatrix& m);

}  // namespace h2cert
