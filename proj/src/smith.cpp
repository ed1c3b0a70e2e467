#include "h2cert/smith.hpp"

#include <cassert>
#include <optional>
#include <utility>

namespace h2cert {
namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

class SmithReducer {
 public:
  SmithReducer(const IntMatrix& m, bool track)
      : a_(m), track_(track), u_(RingTag::integers(), track ? m.rows() : 0, track ? m.rows() : 0),
        v_(RingTag::integers(), track ? m.cols() : 0, track ? m.cols() : 0) {
    if (track_) {
      for (std::size_t i = 0; i < m.rows(); ++i) u_(i, i) = 1;
      for (std::size_t j = 0; j < m.cols(); ++j) v_(j, j) = 1;
    }
  }

  SmithForm run() {
    const std::size_t limit = std::min(a_.rows(), a_.cols());
    SmithForm form;
    for (std::size_t t = 0; t < limit; ++t) {
      auto pivot = smallest_entry(t);
      if (!pivot) break;
      move_to(t, pivot->first, pivot->second);
      while (!clear_cross(t) || !pivot_divides_rest(t)) {
      }
      if (sgn(a_(t, t)) < 0) negate_row(t);
      form.invariant_factors.push_back(a_(t, t));
    }
    form.rank = form.invariant_factors.size();
    return form;
  }

  IntMatrix& diagonal() { return a_; }
  IntMatrix& left() { return u_; }
  IntMatrix& right() { return v_; }

 private:
  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a_.rows(); ++i) {
      for (std::size_t j = t; j < a_.cols(); ++j) {
        if (sgn(a_(i, j)) == 0) continue;
        if (!best || cmpabs(a_(i, j), a_(best->first, best->second)) < 0) best = {i, j};
      }
    }
    return best;
  }

  void move_to(std::size_t t, std::size_t i, std::size_t j) {
    if (i != t) swap_rows(i, t);
    if (j != t) swap_cols(j, t);
  }

  // Eliminates row t and column t against the pivot. Returns false when a
  // remainder survived and a smaller pivot was swapped in.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    Integer q;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (sgn(a_(i, t)) == 0) continue;
      nearest_quotient(q, a_(i, t), a_(t, t));
      add_row(i, t, -q);
      if (sgn(a_(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (sgn(a_(t, j)) == 0) continue;
      nearest_quotient(q, a_(t, j), a_(t, t));
      add_col(j, t, -q);
      if (sgn(a_(t, j)) != 0) clean = false;
    }
    if (clean) return true;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      if (sgn(a_(i, t)) != 0 && cmpabs(a_(i, t), a_(bi, bj)) < 0) bi = i, bj = t;
    }
    for (std::size_t j = t + 1; j < a_.cols(); ++j) {
      if (sgn(a_(t, j)) != 0 && cmpabs(a_(t, j), a_(bi, bj)) < 0) bi = t, bj = j;
    }
    move_to(t, bi, bj);
    return false;
  }

  bool pivot_divides_rest(std::size_t t) {
    for (std::size_t i = t + 1; i < a_.rows(); ++i) {
      for (std::size_t j = t + 1; j < a_.cols(); ++j) {
        if (!mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
          add_row(t, i, 1);
          return false;
        }
      }
    }
    return true;
  }

  static void nearest_quotient(Integer& q, const Integer& n, const Integer& d) {
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    Integer r = n - q * d;
    Integer twice = 2 * r;
    if (cmpabs(twice, d) > 0) q += 1;  // floor remainder shares the sign of d
  }

  void swap_rows(std::size_t i, std::size_t k) {
    auto a = a_.row(i), b = a_.row(k);
    std::swap_ranges(a.begin(), a.end(), b.begin());
    if (track_) {
      auto x = u_.row(i), y = u_.row(k);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
  }

  void swap_cols(std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < a_.rows(); ++i) std::swap(a_(i, j), a_(i, k));
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) std::swap(v_(i, j), v_(i, k));
    }
  }

  void add_row(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < a_.cols(); ++j) {
      if (sgn(a_(src, j)) != 0) a_(dst, j) += f * a_(src, j);
    }
    if (track_) {
      for (std::size_t j = 0; j < u_.cols(); ++j) u_(dst, j) += f * u_(src, j);
    }
  }

  void add_col(std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      if (sgn(a_(i, src)) != 0) a_(i, dst) += f * a_(i, src);
    }
    if (track_) {
      for (std::size_t i = 0; i < v_.rows(); ++i) v_(i, dst) += f * v_(i, src);
    }
  }

  void negate_row(std::size_t i) {
    for (auto& x : a_.row(i)) x = -x;
    if (track_) {
      for (auto& x : u_.row(i)) x = -x;
    }
  }

  IntMatrix a_;
  bool track_;
  IntMatrix u_;
  IntMatrix v_;
};

}  // namespace

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : invariant_factors) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

SmithDecomposition smith_with_transforms(const IntMatrix& m) {
  if (m.ring().kind() != RingKind::IntZ) fail(ErrorCode::RingMismatch, "Smith form needs an integer matrix");
  SmithReducer reducer(m, true);
  SmithForm form = reducer.run();
  return {std::move(form), std::move(reducer.left()), std::move(reducer.right()), std::move(reducer.diagonal())};
}

SmithForm smith_normal_form(const IntMatrix& m) {
  if (m.ring().kind() != RingKind::IntZ) fail(ErrorCode::RingMismatch, "Smith form needs an integer matrix");
#ifndef NDEBUG
  SmithDecomposition d = smith_with_transforms(m);
  assert(multiply(multiply(d.left, m), d.right) == d.diagonal);
  return d.form;
#else
  return SmithReducer(m, false).run();
#endif
}

}  // namespace h2cert
