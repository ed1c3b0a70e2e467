#include "h2cert/rank_analysis.hpp"

namespace h2cert {
namespace {

template <class C>
Matrix<C> drop_last_row(const Matrix<C>& m) {
  Matrix<C> out(m.ring(), m.rows() - 1, m.cols());
  for (std::size_t i = 0; i + 1 < m.rows(); ++i) {
    auto src = m.row(i);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

}  // namespace

RankReport observed_rank(const ModBiSeries& f) {
  if (f.ring().kind() != RingKind::Fp) {
    fail(ErrorCode::UnsupportedRing, "rank over " + f.ring().name() + " is not defined here; reduce to F_p or use Z");
  }
  const FpMatrix m = coefficient_matrix(f);
  RankReport r{f.ring(), f.nx(), f.ny(), rank_fp(m), std::nullopt, false};
  r.stabilized = f.ny() > 1 && rank_fp(drop_last_row(m)) == r.rank;
  return r;
}

RankReport observed_rank(const ZBiSeries& f) {
  const IntMatrix m = coefficient_matrix(f);
  SmithForm s = smith_normal_form(m);
  RankReport r{f.ring(), f.nx(), f.ny(), s.rank, std::move(s.invariant_factors), false};
  r.stabilized = f.ny() > 1 && rank_q(drop_last_row(m)) == r.rank;
  return r;
}

std::vector<RankOnePair> finite_rank_decomposition(const ModBiSeries& f, std::size_t expected_rank) {
  if (f.ring().kind() != RingKind::Fp) fail(ErrorCode::UnsupportedRing, "decomposition needs F_p coefficients");
  const FpMatrix m = coefficient_matrix(f);
  const EchelonForm e = rref_fp(m);
  if (e.rank() != expected_rank) {
    fail(ErrorCode::RankMismatch, "observed rank " + std::to_string(e.rank()) + ", expected " + std::to_string(expected_rank));
  }
  std::vector<RankOnePair> pairs;
  for (std::size_t s = 0; s < e.rank(); ++s) {
    auto row = e.rref.row(s);
    ModSeries a(f.ring(), std::vector<Residue>(row.begin(), row.end()));
    ModSeries b(f.ring(), f.ny());
    // Row j of M equals sum_s M(j, pivot_s) * rref_s.
    for (std::size_t j = 0; j < f.ny(); ++j) b.set(j, m(j, e.pivots[s]));
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

ModBiSeries recompose(const RingTag& ring, std::size_t nx, std::size_t ny, const std::vector<RankOnePair>& pairs) {
  ModBiSeries out(ring, nx, ny);
  for (const auto& [a, b] : pairs) out += outer_product(a, b);
  return out;
}

}  // namespace h2cert
