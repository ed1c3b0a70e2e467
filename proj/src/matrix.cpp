#include "h2cert/matrix.hpp"

#include <utility>

namespace h2cert {
namespace {

void require_field(const FpMatrix& m) {
  if (m.ring().kind() != RingKind::Fp) fail(ErrorCode::RingMismatch, "F_p elimination on " + m.ring().name());
}

}  // namespace

EchelonForm rref_fp(const FpMatrix& input) {
  require_field(input);
  const std::uint64_t p = input.ring().modulus();
  FpMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      auto a = m.row(pivot);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const Residue inv = inverse_mod(m(r, c), p);
    auto pr = m.row(r);
    for (std::size_t j = c; j < m.cols(); ++j) pr[j] = mul_mod(pr[j], inv, p);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Residue f = m(i, c);
      auto ri = m.row(i);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (pr[j] != 0) ri[j] = sub_mod(ri[j], mul_mod(f, pr[j], p), p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank_fp(const FpMatrix& m) { return rref_fp(m).rank(); }

std::vector<std::vector<Residue>> kernel_basis_fp(const FpMatrix& m) {
  const EchelonForm e = rref_fp(m);
  const std::uint64_t p = m.ring().modulus();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<Residue>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = neg_mod(e.rref(i, free), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Residue> apply_fp(const FpMatrix& m, std::span<const Residue> v) {
  const std::uint64_t p = m.ring().modulus();
  if (v.size() != m.cols()) fail(ErrorCode::IndexOutOfRange, "vector length differs from matrix width");
  std::vector<Residue> out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    Residue acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (r[j] != 0 && v[j] != 0) acc = add_mod(acc, mul_mod(r[j], v[j], p), p);
    }
    out[i] = acc;
  }
  return out;
}

std::size_t rank_q(const IntMatrix& input) {
  // Bareiss: every intermediate entry is a minor, so the division is exact.
  IntMatrix m = input;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r) {
      auto a = m.row(pivot);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::IndexOutOfRange, "matrix product shape mismatch");
  IntMatrix out(RingTag::integers(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

}  // namespace h2cert
