#include "h2cert/homology.hpp"

#include <map>
#include <tuple>

namespace h2cert {
namespace {

using SparseRow = std::map<std::size_t, Integer>;

IntMatrix from_rows(const std::vector<SparseRow>& rows, std::size_t cols) {
  IntMatrix m(RingTag::integers(), rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, c] : rows[i]) m(i, j) = c;
  }
  return m;
}

void add_term(SparseRow& row, std::size_t j, const Integer& c) {
  Integer& slot = row[j];
  slot += c;
  if (sgn(slot) == 0) row.erase(j);
}

std::vector<std::string> pair_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) names.push_back("e_" + std::to_string(a) + "," + std::to_string(b));
  }
  return names;
}

// x^i wedge x^j in the pair basis, with the sign from ordering.
void add_wedge(SparseRow& row, std::size_t i, std::size_t j, std::size_t n, const Integer& c) {
  if (i == j || i >= n || j >= n) return;
  if (i < j) {
    add_term(row, wedge_index(i, j, n), c);
  } else {
    add_term(row, wedge_index(j, i, n), -c);
  }
}

// (1+x) acting on x^a ^ x^b minus the identity, truncated at n.
SparseRow completion_relation(std::size_t a, std::size_t b, std::size_t n) {
  SparseRow row;
  add_wedge(row, a, b + 1, n, 1);
  add_wedge(row, a + 1, b, n, 1);
  add_wedge(row, a + 1, b + 1, n, 1);
  return row;
}

std::size_t kernel_rank(const IntMatrix& m) { return m.cols() - rank_q(m); }

}  // namespace

std::size_t wedge_index(std::size_t a, std::size_t b, std::size_t n) {
  // Pairs (a', b') with a' < a come first: sum_{a' < a} (n - 1 - a').
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

CoinvariantPresentation present(std::vector<std::string> names, IntMatrix relations) {
  CoinvariantPresentation out;
  out.generator_count = relations.cols();
  out.generator_names = std::move(names);
  out.smith = smith_normal_form(relations);
  out.relations = std::move(relations);
  out.free_rank = out.generator_count - out.smith.rank;
  out.torsion = out.smith.torsion();
  return out;
}

CoinvariantPresentation lambda2_coinvariants(WindowModel model, std::size_t window) {
  if (window < 2) fail(ErrorCode::BadWindow, "window must be at least 2, got " + std::to_string(window));
  const std::size_t n = window;
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      SparseRow row;
      if (model == WindowModel::Group) {
        if (b + 2 > n) continue;
        add_term(row, wedge_index(a, b, n), 1);
        add_term(row, wedge_index(a + 1, b + 1, n), -1);
      } else {
        row = completion_relation(a, b, n);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  return present(pair_names(n), from_rows(rows, n * (n - 1) / 2));
}

CoinvariantPresentation h2hat_quotient_presentation(std::size_t n) {
  if (n < 1) fail(ErrorCode::BadWindow, "truncation must be at least 1");
  auto index = [n](std::size_t a, std::size_t b) { return b * n + a; };
  std::vector<std::string> names(n * n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) names[index(a, b)] = "x^" + std::to_string(a) + "*y^" + std::to_string(b);
  }
  std::vector<SparseRow> rows;
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      SparseRow row;
      const std::tuple<std::size_t, std::size_t> shifts[] = {{1, 0}, {0, 1}, {1, 1}};
      for (auto [da, db] : shifts) {
        if (a + da < n && b + db < n) add_term(row, index(a + da, b + db), 1);
      }
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      SparseRow row;
      add_term(row, index(a, b), 1);
      if (a != b) add_term(row, index(b, a), 1);
      rows.push_back(std::move(row));
    }
  }
  return present(std::move(names), from_rows(rows, n * n));
}

CEComplexSlice ce_h2(std::size_t n) {
  if (n < 2) fail(ErrorCode::BadWindow, "Chevalley-Eilenberg window needs N >= 2");
  const std::size_t dim = n + 1;  // basis: e, then x^0 .. x^{N-1}
  // [u, v] on basis vectors as (index, sign), or none.
  auto bracket = [n](std::size_t u, std::size_t v) -> SparseRow {
    SparseRow out;
    if (u == 0 && v > 0 && v < n) out[v + 1] = 1;
    if (v == 0 && u > 0 && u < n) out[u + 1] = -1;
    return out;
  };
  const std::size_t pairs = dim * (dim - 1) / 2;
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> triples;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      for (std::size_t c = b + 1; c < dim; ++c) triples.emplace_back(a, b, c);
    }
  }
  CEComplexSlice s;
  s.n = n;
  s.d2 = IntMatrix(RingTag::integers(), dim, pairs);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a + 1; b < dim; ++b) {
      for (const auto& [k, c] : bracket(a, b)) s.d2(k, wedge_index(a, b, dim)) += c;
    }
  }
  s.d3 = IntMatrix(RingTag::integers(), pairs, triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [a, b, c] = triples[t];
    SparseRow image;
    const std::tuple<std::size_t, std::size_t, std::size_t> terms[] = {{a, b, c}, {b, c, a}, {c, a, b}};
    for (auto [u, v, w] : terms) {
      for (const auto& [k, coeff] : bracket(u, v)) add_wedge(image, k, w, dim, coeff);
    }
    for (const auto& [k, coeff] : image) s.d3(k, t) = coeff;
  }
  const IntMatrix composite = multiply(s.d2, s.d3);
  s.chain_complex = std::all_of(composite.entries().begin(), composite.entries().end(),
                                [](const Integer& c) { return sgn(c) == 0; });
  const std::size_t rank_d3 = rank_q(s.d3);
  s.h2_rank = kernel_rank(s.d2) - rank_d3;
  s.h2_torsion = smith_normal_form(s.d3).torsion();

  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      SparseRow row;
      add_wedge(row, a + 1, b, n, 1);
      add_wedge(row, a, b + 1, n, 1);
      if (!row.empty()) rows.push_back(std::move(row));
    }
  }
  s.coinvariant_rank = present(pair_names(n), from_rows(rows, n * (n - 1) / 2)).free_rank;
  IntMatrix x_action(RingTag::integers(), n, n);
  for (std::size_t a = 0; a + 1 < n; ++a) x_action(a + 1, a) = 1;
  s.invariant_rank = kernel_rank(x_action);
  return s;
}

bool phi_sends_relations_to_relations(std::size_t window) {
  if (window < 2) fail(ErrorCode::BadWindow, "window must be at least 2");
  const std::size_t n = window;
  // phi(t^a) = (1+x)^a truncated at n.
  std::vector<std::vector<Integer>> phi(n + 1, std::vector<Integer>(n, 0));
  phi[0][0] = 1;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t i = 0; i < n; ++i) phi[a][i] = phi[a - 1][i] + (i > 0 ? phi[a - 1][i - 1] : Integer(0));
  }
  auto wedge = [n](const std::vector<Integer>& u, const std::vector<Integer>& w) {
    SparseRow row;
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(u[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(w[j]) != 0) add_wedge(row, i, j, n, u[i] * w[j]);
      }
    }
    return row;
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b + 2 <= n; ++b) {
      const SparseRow before = wedge(phi[a], phi[b]);
      SparseRow image = before;
      for (const auto& [k, c] : wedge(phi[a + 1], phi[b + 1])) add_term(image, k, -c);
      SparseRow combination;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          auto it = before.find(wedge_index(i, j, n));
          if (it == before.end()) continue;
          for (const auto& [k, c] : completion_relation(i, j, n)) add_term(combination, k, -it->second * c);
        }
      }
      if (image != combination) return false;
    }
  }
  return true;
}

}  // namespace h2cert
