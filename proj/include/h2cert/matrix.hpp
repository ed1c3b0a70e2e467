#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "h2cert/coeff.hpp"

namespace h2cert {

/// Dense row-major matrix over IntZ or F_p.
template <class C>
class Matrix {
 public:
  Matrix(RingTag ring, std::size_t rows, std::size_t cols)
      : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Coeff<C>::zero(ring)) {
    require_ring<C>(ring_);
  }

  const RingTag& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  C& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const C& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<C> row(std::size_t i) { return {entries_.data() + i * cols_, cols_}; }
  std::span<const C> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

  std::span<const C> entries() const noexcept { return entries_; }

  void append_row(std::span<const C> values) {
    if (values.size() != cols_) fail(ErrorCode::IndexOutOfRange, "row width differs from matrix width");
    entries_.insert(entries_.end(), values.begin(), values.end());
    ++rows_;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  RingTag ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<C> entries_;
};

using IntMatrix = Matrix<Integer>;
using FpMatrix = Matrix<Residue>;

/// Reduced row echelon form over F_p with its pivot columns.
struct EchelonForm {
  FpMatrix rref;
  std::vector<std::size_t> pivots;
  std::size_t rank() const noexcept { return pivots.size(); }
};

EchelonForm rref_fp(const FpMatrix& m);
std::size_t rank_fp(const FpMatrix& m);

/// Basis of the right null space {v : M v = 0}; one vector per free column.
std::vector<std::vector<Residue>> kernel_basis_fp(const FpMatrix& m);

std::vector<Residue> apply_fp(const FpMatrix& m, std::span<const Residue> v);

// Rank over Q via fraction-free elimination.
std::size_t rank_q(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

}  // namespace h2cert
