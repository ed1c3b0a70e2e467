#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "h2cert/bi_series.hpp"
#include "h2cert/matrix.hpp"
#include "h2cert/smith.hpp"

namespace h2cert {

/// Ny x Nx matrix whose row j holds the coefficients of f_j(x).
template <class C>
Matrix<C> coefficient_matrix(const BiSeries<C>& f) {
  Matrix<C> m(f.ring(), f.ny(), f.nx());
  for (std::size_t j = 0; j < f.ny(); ++j) {
    const auto& row = f.row(j);
    for (std::size_t a = 0; a < f.nx(); ++a) m(j, a) = row[a];
  }
  return m;
}

struct RankReport {
  RingTag ring = RingTag::integers();
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::size_t rank = 0;
  std::optional<std::vector<Integer>> invariant_factors;  // IntZ only
  bool stabilized = false;  // same rank with the last row dropped
};

RankReport observed_rank(const ModBiSeries& f);
RankReport observed_rank(const ZBiSeries& f);

/// Pairs (a_s(x), b_s(y)) with F = sum a_s(x) b_s(y) at truncation. The a_s
/// are the nonzero rows of the reduced echelon form, in pivot order.
using RankOnePair = std::pair<ModSeries, ModSeries>;
std::vector<RankOnePair> finite_rank_decomposition(const ModBiSeries& f, std::size_t expected_rank);

ModBiSeries recompose(const RingTag& ring, std::size_t nx, std::size_t ny, const std::vector<RankOnePair>& pairs);

}  // namespace h2cert
