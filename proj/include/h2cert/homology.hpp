#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "h2cert/bi_series.hpp"
#include "h2cert/matrix.hpp"
#include "h2cert/smith.hpp"

namespace h2cert {

/// Z^generators / (row span of relations), read through the Smith form.
struct CoinvariantPresentation {
  std::size_t generator_count = 0;
  std::vector<std::string> generator_names;
  IntMatrix relations{RingTag::integers(), 0, 0};
  SmithForm smith;
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};

CoinvariantPresentation present(std::vector<std::string> names, IntMatrix relations);

enum class WindowModel { Group, Completion };

/// Group window: e_{a,b} (0 <= a < b < W) modulo e_{a,b} - e_{a+1,b+1}.
/// Completion window: e_{a,b} (0 <= a < b < N) modulo the (1+x)-action
/// minus identity, e_{a,b+1} + e_{a+1,b} + e_{a+1,b+1}, dropping indices >= N.
CoinvariantPresentation lambda2_coinvariants(WindowModel model, std::size_t window);

/// Index of e_{a,b} in the lexicographic basis of pairs a < b < n.
std::size_t wedge_index(std::size_t a, std::size_t b, std::size_t n);

/// f(x) g(y).
template <class C>
BiSeries<C> theta_image(const TruncSeries<C>& f, const TruncSeries<C>& g) {
  f.check_compatible(g);
  return outer_product(f, g);
}

/// Monomials x^a y^b (a, b < N) modulo (x+y+xy) times every monomial,
/// the symmetrizations x^a y^b + x^b y^a and the diagonals x^a y^a.
CoinvariantPresentation h2hat_quotient_presentation(std::size_t n);

struct CEComplexSlice {
  std::size_t n = 0;
  IntMatrix d2{RingTag::integers(), 0, 0};  // columns: wedge basis of Lambda^2 g
  IntMatrix d3{RingTag::integers(), 0, 0};  // columns: wedge basis of Lambda^3 g
  bool chain_complex = false;               // d2 d3 = 0
  std::size_t h2_rank = 0;                  // dim ker d2 - rank d3
  std::vector<Integer> h2_torsion;
  std::size_t coinvariant_rank = 0;  // rank (Lambda^2 M)_{Zx}
  std::size_t invariant_rank = 0;    // rank M^{Zx}
  bool rank_identity() const noexcept { return h2_rank == coinvariant_rank + invariant_rank; }
};

/// g = Z e + Z[x]/x^N with [e, x^a] = x^{a+1} and M abelian.
CEComplexSlice ce_h2(std::size_t n);

/// Images of the group-window relations under t^a -> (1+x)^a, written as
/// explicit integer combinations of completion-window relations. Returns
/// true when every image equals its combination exactly.
bool phi_sends_relations_to_relations(std::size_t window);

}  // namespace h2cert
