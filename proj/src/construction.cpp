#include "h2cert/construction.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "h2cert/matrix.hpp"
#include "h2cert/smith.hpp"

namespace h2cert {
namespace {

constexpr long kMaxIndex = 38;  // 3^39 overflows int64 once (k+1) i is added

long pow3(long i) {
  long v = 1;
  for (long j = 0; j < i; ++j) v *= 3;
  return v;
}

void require_truncation(std::size_t n, const char* what) {
  if (n < 4) fail(ErrorCode::BadIndex, std::string(what) + " must be at least 4");
}

// All exponents s_{i,k} (or t_{i,k}) below the bound, over i >= max(k,1).
std::vector<long> generator_exponents(GeneratorKind kind, long k, std::size_t order) {
  std::vector<long> out;
  for (long i = std::max(k, 1L); i <= kMaxIndex; ++i) {
    const ExpPair e = exponents(i, k);
    const long v = kind == GeneratorKind::G ? e.s : e.t;
    if (v >= static_cast<long>(order)) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace

ExpPair exponents(long i, long k) {
  if (i < 1) fail(ErrorCode::BadIndex, "exponent index i must be >= 1, got " + std::to_string(i));
  if (k < 0) fail(ErrorCode::BadIndex, "exponent index k must be >= 0, got " + std::to_string(k));
  if (i > kMaxIndex) fail(ErrorCode::BadIndex, "exponent index i too large for 64-bit exponents");
  const long base = pow3(i);
  return {i, k, base + (k + 1) * i, base - (k + 1) * i};
}

bool exponent_chain_holds(long d) {
  if (d < 2) fail(ErrorCode::BadIndex, "chain needs d >= 2");
  for (long k = 0; k < d; ++k) {
    if (exponents(d, k).t - exponents(d, k + 1).t != d) return false;
  }
  if (exponents(d, 0).t + d > exponents(d, 0).s) return false;
  return exponents(d - 1, d - 1).s < exponents(d, d).t;
}

ExplicitSeries build_F_audited(std::size_t nx, std::size_t ny) {
  require_truncation(nx, "Nx");
  require_truncation(ny, "Ny");
  std::map<std::pair<long, long>, std::size_t> hits;
  ZBiSeries f(RingTag::integers(), nx, ny);
  for (long k = 0; k < kMaxIndex; ++k) {
    const auto xs = generator_exponents(GeneratorKind::G, k, nx);
    const auto ys = generator_exponents(GeneratorKind::HTilde, k, ny);
    if (xs.empty()) break;  // s_{k,k} grows with k
    const Integer c = factorial(static_cast<unsigned>(k));
    for (long s : xs) {
      for (long t : ys) {
        f.add_at(static_cast<std::size_t>(s), static_cast<std::size_t>(t), c);
        ++hits[{s, t}];
      }
    }
  }
  ExplicitSeries out{std::move(f), {}};
  for (const auto& [st, count] : hits) {
    if (count > 1) out.collisions.push_back({st.first, st.second, count});
  }
  return out;
}

ZBiSeries build_F(std::size_t nx, std::size_t ny) { return build_F_audited(nx, ny).f; }

ZSeries build_generator(GeneratorKind kind, long k, std::size_t order) {
  if (k < 0) fail(ErrorCode::BadIndex, "generator index must be >= 0");
  require_truncation(order, "truncation");
  ZSeries g(RingTag::integers(), order);
  const Integer c = kind == GeneratorKind::G ? factorial(static_cast<unsigned>(k)) : Integer(1);
  for (long e : generator_exponents(kind, k, order)) g.add_at(static_cast<std::size_t>(e), c);
  return g;
}

ModSeries build_generator_mod(GeneratorKind kind, long k, std::size_t order, std::uint64_t p) {
  return reduce_mod(build_generator(kind, k, order), RingTag::prime_field(p));
}

DivisibilityWitness divisibility_witness(std::uint64_t p, std::size_t nx, std::size_t ny) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  ZBiSeries residual = build_F(nx, ny);
  for (long k = 0; k < static_cast<long>(p); ++k) {
    const Integer c = factorial(static_cast<unsigned>(k));
    for (long s : generator_exponents(GeneratorKind::G, k, nx)) {
      for (long t : generator_exponents(GeneratorKind::HTilde, k, ny)) {
        residual.add_at(static_cast<std::size_t>(s), static_cast<std::size_t>(t), -c);
      }
    }
  }
  DivisibilityWitness w{p, ZBiSeries(RingTag::integers(), nx, ny), 0};
  const Integer prime(static_cast<unsigned long>(p));
  for (std::size_t b = 0; b < ny; ++b) {
    for (std::size_t a = 0; a < nx; ++a) {
      const Integer& c = residual.at(a, b);
      if (sgn(c) == 0) continue;
      if (!mpz_divisible_p(c.get_mpz_t(), prime.get_mpz_t())) {
        fail(ErrorCode::NotDivisible, "coefficient " + c.get_str() + " at x^" + std::to_string(a) + " y^" +
                                          std::to_string(b) + " is not divisible by " + std::to_string(p));
      }
      Integer q;
      mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), prime.get_mpz_t());
      w.quotient.set(a, b, std::move(q));
      ++w.residual_terms;
    }
  }
  return w;
}

SpeckerReport specker_padic(std::uint64_t p, unsigned k_cut, std::size_t order) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (k_cut < 1 || k_cut >= order) fail(ErrorCode::BadIndex, "need 1 <= kCut < N");
  const RingTag z = RingTag::integers();
  SpeckerReport r{p, k_cut, order, ZBiSeries(z, order, order), false, false, {}, false, false};
  ZBiSeries partial(z, order, order);
  const Integer prime(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < order; ++i) {
    const Integer c = power(prime, static_cast<unsigned>(i));
    r.f.set(i, i, c);
    if (i < k_cut) partial.set(i, i, c);
  }
  const Integer pk = power(prime, k_cut);
  const ZBiSeries residual = r.f - partial;
  r.residual_divisible = true;
  for (std::size_t b = 0; b < order; ++b) {
    for (std::size_t a = 0; a < order; ++a) {
      if (!mpz_divisible_p(residual.at(a, b).get_mpz_t(), pk.get_mpz_t())) r.residual_divisible = false;
    }
  }
  const RingTag zpk = RingTag::prime_power(p, k_cut);
  r.agrees_mod_pk = reduce_mod(r.f, zpk) == reduce_mod(partial, zpk);

  IntMatrix m(z, order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = r.f.at(i, i);
  r.invariant_factors = smith_normal_form(m).invariant_factors;
  r.factors_expected = r.invariant_factors.size() == order;
  for (std::size_t i = 0; r.factors_expected && i < order; ++i) {
    r.factors_expected = r.invariant_factors[i] == power(prime, static_cast<unsigned>(i));
  }
  r.symmetric = r.f == transpose(r.f);
  return r;
}

const Rational& RationalEnumeration::at(std::size_t n) {
  if (n < 1) fail(ErrorCode::BadIndex, "enumeration starts at index 1");
  while (values_.size() < n) extend_height();
  return values_[n - 1];
}

void RationalEnumeration::extend_height() {
  const long h = ++height_;
  for (long den = h; den >= 1; --den) {
    std::vector<long> nums;
    if (den == h) {
      for (long num = 1; num <= h; ++num) nums.push_back(num);
    } else {
      nums.push_back(h);
    }
    for (long num : nums) {
      if (std::gcd(num, den) != 1) continue;
      Rational q(num, den);
      q.canonicalize();
      values_.push_back(q);
      values_.push_back(-q);
    }
  }
}

Rational enumerate_rationals(std::size_t n) {
  RationalEnumeration e;
  return e.at(n);
}

std::vector<std::size_t> continuum_support(const Rational& r, std::size_t order) {
  if (order < 2) fail(ErrorCode::BadIndex, "continuum members need N >= 2");
  RationalEnumeration e;
  std::vector<std::size_t> support;
  for (std::size_t n = 1; n < 63 && (std::size_t{1} << n) < order; ++n) {
    if (e.at(n) < r) support.push_back(std::size_t{1} << n);
  }
  return support;
}

ZSeries continuum_member(const Rational& r, std::size_t order) {
  ZSeries g(RingTag::integers(), order);
  for (auto e : continuum_support(r, order)) g.set(e, 1);
  return g;
}

std::string explicit_pillar_family(const ModBiSeries& f, const SieveCertificate& cert) {
  auto matches = [&](GeneratorKind kind) {
    for (std::size_t l = 1; l <= cert.pillars.size(); ++l) {
      if (l > cert.p) return false;
      const long k = static_cast<long>(cert.p - l);
      if (!(f.row(cert.pillars[l - 1]) == build_generator_mod(kind, k, f.nx(), cert.p))) return false;
    }
    return true;
  };
  if (matches(GeneratorKind::G)) return "g";
  if (matches(GeneratorKind::HTilde)) return "h-tilde";
  return "other";
}

std::vector<ZSeries> continuum_differences(std::vector<Rational> rs, std::size_t order) {
  std::sort(rs.begin(), rs.end());
  std::vector<ZSeries> out;
  for (std::size_t l = 0; l < rs.size(); ++l) {
    ZSeries h = continuum_member(rs[l], order);
    if (l > 0) h -= continuum_member(rs[l - 1], order);
    out.push_back(std::move(h));
  }
  return out;
}

std::vector<IsolationCertificate> isolation_certificates(std::vector<Rational> rs, std::size_t order, std::size_t min_radius) {
  std::sort(rs.begin(), rs.end());
  const auto hs = continuum_differences(rs, order);
  std::vector<std::size_t> all;
  for (const auto& h : hs) {
    for (std::size_t e = 0; e < order; ++e) {
      if (sgn(h[e]) != 0) all.push_back(e);
    }
  }
  std::sort(all.begin(), all.end());
  std::vector<IsolationCertificate> certs;
  for (std::size_t l = 0; l < hs.size(); ++l) {
    IsolationCertificate c{rs[l], std::nullopt, 0, false};
    for (std::size_t m = 0; m < order; ++m) {
      if (sgn(hs[l][m]) == 0) continue;
      bool alone = true;
      for (std::size_t o = 0; o < hs.size(); ++o) {
        if (o != l && sgn(hs[o][m]) != 0) alone = false;
      }
      if (!alone) continue;
      std::size_t radius = order - m;
      auto it = std::lower_bound(all.begin(), all.end(), m);
      if (it != all.begin()) radius = std::min(radius, m - *std::prev(it));
      auto next = std::upper_bound(all.begin(), all.end(), m);
      if (next != all.end()) radius = std::min(radius, *next - m);
      if (!c.m || radius > c.radius) {
        c.m = m;
        c.radius = radius;
      }
    }
    c.holds = c.m.has_value() && c.radius >= min_radius;
    certs.push_back(std::move(c));
  }
  return certs;
}

}  // namespace h2cert
