#include "h2cert/oracles.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <numeric>

namespace h2cert::oracle {
namespace {

Integer determinant(std::vector<std::vector<Integer>> a) {
  // Laplace expansion along the first row; only used for k <= 4.
  const std::size_t k = a.size();
  if (k == 1) return a[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < k; ++c) {
    if (sgn(a[0][c]) == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < k; ++j) {
        if (j != c) row.push_back(a[r][j]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = a[0][c] * determinant(std::move(minor));
    det += (c % 2 == 0) ? term : Integer(-term);
  }
  return det;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

using Dense = std::vector<std::vector<Integer>>;

Dense to_dense(const IntMatrix& m) {
  Dense d(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  }
  return d;
}

Dense transpose(const Dense& a, std::size_t cols) {
  Dense t(cols, std::vector<Integer>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = a[i][j];
  }
  return t;
}

// Row Hermite form by extended-gcd row operations, then zero rows dropped and
// pivot columns moved to the front so pivots sit on the diagonal.
void row_hermite(Dense& a, std::size_t cols) {
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (sgn(a[r][c]) != 0 && mpz_divisible_p(a[i][c].get_mpz_t(), a[r][c].get_mpz_t())) {
        const Integer q = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[r][c].get_mpz_t(), a[i][c].get_mpz_t());
      const Integer u = a[r][c] / g;
      const Integer v = a[i][c] / g;
      for (std::size_t j = 0; j < cols; ++j) {
        const Integer x = a[r][j];
        const Integer y = a[i][j];
        a[r][j] = s * x + t * y;
        a[i][j] = -v * x + u * y;
      }
    }
    if (sgn(a[r][c]) != 0) {
      pivots.push_back(c);
      ++r;
    }
  }
  a.resize(r);
  std::vector<std::size_t> order = pivots;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) order.push_back(c);
  }
  for (auto& row : a) {
    std::vector<Integer> permuted;
    for (auto c : order) permuted.push_back(row[c]);
    row = std::move(permuted);
  }
}

// At most one nonzero entry in every row and column: diagonal up to
// permutation, which is all the invariant factors need.
bool is_monomial(const Dense& a, std::size_t cols) {
  std::vector<int> per_col(cols, 0);
  for (const auto& row : a) {
    int in_row = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(row[j]) == 0) continue;
      if (++in_row > 1 || ++per_col[j] > 1) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Integer> gcd_of_minors_factors(const IntMatrix& m) {
  const Dense a = to_dense(m);
  std::vector<Integer> divisors{1};
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rows);
    subsets(m.cols(), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& rs : rows) {
      for (const auto& cs : cols) {
        Dense sub(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), determinant(std::move(sub)).get_mpz_t());
      }
    }
    if (sgn(g) == 0) break;
    divisors.push_back(g);
  }
  std::vector<Integer> factors;
  for (std::size_t k = 1; k < divisors.size(); ++k) factors.push_back(divisors[k] / divisors[k - 1]);
  return factors;
}

std::vector<Integer> alternating_hnf_factors(const IntMatrix& m) {
  Dense a = to_dense(m);
  std::size_t cols = m.cols();
  while (!is_monomial(a, cols)) {
    row_hermite(a, cols);
    const std::size_t rank = a.size();
    a = transpose(a, cols);
    cols = rank;
  }
  std::vector<Integer> diag;
  for (const auto& row : a) {
    for (const auto& x : row) {
      if (sgn(x) != 0) diag.push_back(abs(x));
    }
  }
  std::sort(diag.begin(), diag.end());
  // Pairwise (d_i, d_j) -> (gcd, lcm) until the chain divides.
  for (std::size_t i = 0; i < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  }
  return diag;
}

std::size_t rank_by_elimination(const FpMatrix& m) {
  const std::uint64_t p = m.ring().modulus();
  std::vector<std::vector<Residue>> a(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a[i].assign(m.row(i).begin(), m.row(i).end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      // row_i <- a[rank][c] * row_i - a[i][c] * row_rank
      const Residue x = a[rank][c];
      const Residue y = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) {
        a[i][j] = sub_mod(mul_mod(x, a[i][j], p), mul_mod(y, a[rank][j], p), p);
      }
    }
    ++rank;
  }
  return rank;
}

bool exhaustive_dependence(const std::vector<LaurentTrunc>& g, long degree_bound, long truncation) {
  const std::uint64_t p = g.front().prime();
  const std::size_t slots = g.size() * static_cast<std::size_t>(degree_bound + 1);
  std::vector<Residue> digits(slots, 0);
  auto advance = [&]() {
    for (auto& d : digits) {
      if (++d < p) return true;
      d = 0;
    }
    return false;
  };
  while (advance()) {
    LaurentTrunc sum = LaurentTrunc::zero(p, truncation);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<Residue> coeffs(digits.begin() + static_cast<long>(i * (degree_bound + 1)),
                                  digits.begin() + static_cast<long>((i + 1) * (degree_bound + 1)));
      const PolyFp r(p, coeffs);
      if (!r.is_zero()) sum = sum + g[i].with_order(truncation).mul_poly(r);
    }
    if (sum.is_zero()) return true;
  }
  return false;
}

std::size_t shift_orbit_count(std::size_t w) {
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>> parent;
  std::function<std::pair<std::size_t, std::size_t>(std::pair<std::size_t, std::size_t>)> find =
      [&](std::pair<std::size_t, std::size_t> x) {
        auto& up = parent[x];
        if (up == x) return x;
        up = find(up);
        return up;
      };
  for (std::size_t a = 0; a < w; ++a) {
    for (std::size_t b = a + 1; b < w; ++b) parent[{a, b}] = {a, b};
  }
  for (std::size_t a = 0; a + 1 < w; ++a) {
    for (std::size_t b = a + 1; b + 1 < w; ++b) parent[find({a, b})] = find({a + 1, b + 1});
  }
  std::size_t roots = 0;
  for (const auto& [x, up] : parent) {
    if (find(x) == x) ++roots;
  }
  return roots;
}

QuotientOracle h2hat_brute_force(std::size_t n) {
  using Poly = std::map<std::pair<std::size_t, std::size_t>, long>;
  auto truncated_product = [n](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        const std::size_t x = ea.first + eb.first;
        const std::size_t y = ea.second + eb.second;
        if (x < n && y < n) out[{x, y}] += ca * cb;
      }
    }
    return out;
  };
  const Poly lamplighter{{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}};
  std::vector<Poly> relations;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      relations.push_back(truncated_product(lamplighter, Poly{{{a, b}, 1}}));
      Poly sym{{{a, b}, 1}};
      sym[{b, a}] += 1;  // the diagonal comes out as 2 x^a y^a
      relations.push_back(sym);
      if (a == b) relations.push_back(Poly{{{a, a}, 1}});
    }
  }
  IntMatrix m(RingTag::integers(), relations.size(), n * n);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    for (const auto& [e, c] : relations[i]) m(i, e.first * n + e.second) = c;
  }
  QuotientOracle q;
  const auto factors = alternating_hnf_factors(m);
  q.free_rank = n * n - factors.size();
  for (const auto& f : factors) {
    if (f > 1) q.torsion.push_back(f);
  }
  return q;
}

}  // namespace h2cert::oracle
