#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "h2cert/bi_series.hpp"
#include "h2cert/integer.hpp"
#include "h2cert/series.hpp"
#include "h2cert/sieve.hpp"

namespace h2cert {

/// s = 3^i + (k+1) i and t = 3^i - (k+1) i.
struct ExpPair {
  long i = 0;
  long k = 0;
  long s = 0;
  long t = 0;
};

ExpPair exponents(long i, long k);

/// Checks t_{d,k} - t_{d,k+1} = d, t_{d,0} + d <= s_{d,0} and
/// s_{d-1,d-1} < t_{d,d}. The last one fails for d = 2, 3.
bool exponent_chain_holds(long d);

struct Collision {
  long s = 0;
  long t = 0;
  std::size_t sources = 0;
};

/// F(x,y) = sum_{i,j >= 1} sum_{k <= min(i,j)} k! x^{s_{i,k}} y^{t_{j,k}}.
struct ExplicitSeries {
  ZBiSeries f;
  std::vector<Collision> collisions;
};

ExplicitSeries build_F_audited(std::size_t nx, std::size_t ny);
ZBiSeries build_F(std::size_t nx, std::size_t ny);

enum class GeneratorKind { G, HTilde };

/// g_k = k! sum_{i >= max(k,1)} x^{s_{i,k}}, h~_k = sum_{j >= max(k,1)} x^{t_{j,k}}.
ZSeries build_generator(GeneratorKind kind, long k, std::size_t order);
ModSeries build_generator_mod(GeneratorKind kind, long k, std::size_t order, std::uint64_t p);

/// Q = (F - sum_{k<p} g_k(x) h~_k(y)) / p; throws NotDivisible if some
/// coefficient of the residual is not a multiple of p.
struct DivisibilityWitness {
  std::uint64_t p = 0;
  ZBiSeries quotient;
  std::size_t residual_terms = 0;
};

DivisibilityWitness divisibility_witness(std::uint64_t p, std::size_t nx, std::size_t ny);

/// f = sum_i p^i x^i y^i with checks at precision p^k_cut.
struct SpeckerReport {
  std::uint64_t p = 0;
  unsigned k_cut = 0;
  std::size_t order = 0;
  ZBiSeries f;
  bool residual_divisible = false;  // f - sum_{i<k} p^i x^i y^i in p^k Z
  bool agrees_mod_pk = false;       // same statement read in Z/p^k
  std::vector<Integer> invariant_factors;
  bool factors_expected = false;  // (1, p, ..., p^{N-1})
  bool symmetric = false;
};

SpeckerReport specker_padic(std::uint64_t p, unsigned k_cut, std::size_t order);

/// a_1 = 0, then heights h = max(|num|, den) in increasing order; inside a
/// height, denominators descend, numerators ascend, and +q precedes -q.
class RationalEnumeration {
 public:
  const Rational& at(std::size_t n);  // n >= 1

 private:
  void extend_height();
  std::vector<Rational> values_{Rational(0)};
  long height_ = 0;
};

Rational enumerate_rationals(std::size_t n);

/// sum of x^{2^n} over n >= 1 with a_n < r and 2^n < order.
ZSeries continuum_member(const Rational& r, std::size_t order);
std::vector<std::size_t> continuum_support(const Rational& r, std::size_t order);

/// For the consecutive differences h_1 = g_{r_1}, h_l = g_{r_l} - g_{r_{l-1}}
/// (r sorted ascending): an exponent m where only h_l is nonzero and every
/// member vanishes at m+i for 0 < |i| < radius, with m + radius <= order.
struct IsolationCertificate {
  Rational r;
  std::optional<std::size_t> m;
  std::size_t radius = 0;
  bool holds = false;
};

/// Which generator family the pillar rows of a sieve on the antisymmetrized
/// explicit series equal: "g" when pillar l is g_{p-l} mod p, "h-tilde" for
/// the same with h~, "other" otherwise.
std::string explicit_pillar_family(const ModBiSeries& f, const SieveCertificate& cert);

std::vector<ZSeries> continuum_differences(std::vector<Rational> rs, std::size_t order);
std::vector<IsolationCertificate> isolation_certificates(std::vector<Rational> rs, std::size_t order, std::size_t min_radius);

}  // namespace h2cert
