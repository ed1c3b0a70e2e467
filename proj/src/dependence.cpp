#include "h2cert/dependence.hpp"

#include <algorithm>

#include "h2cert/matrix.hpp"

namespace h2cert {
namespace {

struct Valuations {
  long low = 0;
  long spread = 0;
};

Valuations valuations(const std::vector<LaurentTrunc>& g) {
  Valuations v;
  bool any = false;
  long high = 0;
  for (const auto& s : g) {
    if (s.is_zero()) continue;
    if (!any) {
      v.low = high = s.valuation();
      any = true;
    } else {
      v.low = std::min(v.low, s.valuation());
      high = std::max(high, s.valuation());
    }
  }
  v.spread = high - v.low;
  return v;
}

std::uint64_t common_prime(const std::vector<LaurentTrunc>& g) {
  if (g.empty()) fail(ErrorCode::BoundsTooSmall, "no series given");
  const auto p = g.front().prime();
  for (const auto& s : g) {
    if (s.prime() != p) fail(ErrorCode::PrimeMismatch, "series over F_" + std::to_string(p) + " and F_" + std::to_string(s.prime()));
  }
  return p;
}

}  // namespace

long minimum_truncation(const std::vector<LaurentTrunc>& g, long degree_bound) {
  const Valuations v = valuations(g);
  return v.low + degree_bound + v.spread + 1;
}

long default_truncation(const std::vector<LaurentTrunc>& g, long degree_bound) {
  const Valuations v = valuations(g);
  return v.low + 2 * (degree_bound + 1) * static_cast<long>(g.size()) + v.spread;
}

DependenceWitness rational_dependence(const std::vector<LaurentTrunc>& g, long degree_bound, long truncation) {
  const auto p = common_prime(g);
  if (degree_bound < 0) fail(ErrorCode::BoundsTooSmall, "degree bound must be non-negative");
  const Valuations v = valuations(g);
  if (truncation - v.low <= degree_bound + v.spread) {
    fail(ErrorCode::BoundsTooSmall, "truncation " + std::to_string(truncation) + " leaves no equations beyond degree " +
                                        std::to_string(degree_bound) + " and valuation spread " + std::to_string(v.spread));
  }
  for (const auto& s : g) {
    if (s.order() < truncation) {
      fail(ErrorCode::BoundsTooSmall, "series known only to order " + std::to_string(s.order()) + " < " + std::to_string(truncation));
    }
  }

  const std::size_t n = g.size();
  const auto width = static_cast<std::size_t>(degree_bound + 1);
  const auto rows = static_cast<std::size_t>(truncation - v.low);
  // Column i*(D+1)+c is the coefficient of x^c in r_i; row e is x^(low+e).
  FpMatrix m(RingTag::prime_field(p), rows, n * width);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = g[i];
    if (s.is_zero()) continue;
    const auto cs = s.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
      if (cs[k] == 0) continue;
      const long e = s.low_exp() + static_cast<long>(k);
      for (std::size_t c = 0; c < width; ++c) {
        const long target = e + static_cast<long>(c) - v.low;
        if (target >= static_cast<long>(rows)) break;
        m(static_cast<std::size_t>(target), i * width + c) = cs[k];
      }
    }
  }

  DependenceWitness w;
  w.p = p;
  w.count = n;
  w.degree_bound = degree_bound;
  w.truncation = truncation;
  w.unknowns = n * width;
  w.equations = rows;
  auto kernel = kernel_basis_fp(m);
  if (kernel.empty()) return w;

  auto& vec = kernel.front();
  auto lead = std::find_if(vec.begin(), vec.end(), [](Residue x) { return x != 0; });
  const Residue scale = inverse_mod(*lead, p);
  for (auto& x : vec) x = mul_mod(x, scale, p);
  for (std::size_t i = 0; i < n; ++i) {
    w.relation.emplace_back(p, std::vector<Residue>(vec.begin() + static_cast<long>(i * width),
                                                    vec.begin() + static_cast<long>((i + 1) * width)));
  }
  return w;
}

bool verify_dependence(const std::vector<LaurentTrunc>& g, const DependenceWitness& w) {
  if (g.size() != w.count) return false;
  if (!w.found()) {
    const DependenceWitness again = rational_dependence(g, w.degree_bound, w.truncation);
    return !again.found();
  }
  if (w.relation.size() != g.size()) return false;
  for (const auto& s : g) {
    if (s.order() < w.truncation) return false;
  }
  bool nonzero = false;
  LaurentTrunc sum = LaurentTrunc::zero(w.p, w.truncation);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& r = w.relation[i];
    if (r.degree() > w.degree_bound) return false;
    if (r.is_zero()) continue;
    nonzero = true;
    sum = sum + g[i].with_order(w.truncation).mul_poly(r);
  }
  return nonzero && sum.with_order(w.truncation).is_zero();
}

}  // namespace h2cert
