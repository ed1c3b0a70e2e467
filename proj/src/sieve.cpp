#include "h2cert/sieve.hpp"

#include <algorithm>
#include <random>

#include "h2cert/matrix.hpp"

namespace h2cert {
namespace {

void require_shape(std::size_t n, std::size_t d) {
  if (n < 1 || d < 1) fail(ErrorCode::BadIndex, "sieve needs n >= 1 and d >= 1");
}

bool row_is_zero(const ModBiSeries& f, std::size_t j) { return f.row(j).is_zero(); }

bool windows_hold(const ModBiSeries& f, std::size_t m, std::size_t n, std::size_t d) {
  for (const auto& [lo, hi] : sieve_windows(m, n, d)) {
    for (std::size_t j = lo; j <= hi; ++j) {
      if (!row_is_zero(f, j)) return false;
    }
  }
  return true;
}

std::vector<LaurentTrunc> pillar_rows(const ModBiSeries& f, const std::vector<std::size_t>& pillars) {
  std::vector<LaurentTrunc> rows;
  for (auto j : pillars) rows.push_back(LaurentTrunc::from_series(f.row(j)));
  return rows;
}

ModSeries series_of(const RationalFunction& r, std::size_t order) {
  const LaurentTrunc l = LaurentTrunc::from_rational(r, static_cast<long>(order));
  if (!l.is_zero() && l.low_exp() < 0) fail(ErrorCode::PrecViolated, r.to_string() + " has a pole at x = 0");
  ModSeries s(RingTag::prime_field(r.prime()), order);
  for (std::size_t i = 0; i < l.coeffs().size(); ++i) s.set(static_cast<std::size_t>(l.low_exp()) + i, l.coeffs()[i]);
  return s;
}

}  // namespace

std::vector<std::size_t> sieve_pillars(std::size_t m, std::size_t n, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l <= n; ++l) out.push_back(m + l * d);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> sieve_windows(std::size_t m, std::size_t n, std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (d < 2) return out;
  for (std::size_t l = 0; l <= n; ++l) out.emplace_back(m + l * d + 1, m + l * d + d - 1);
  return out;
}

std::size_t default_m_max(std::size_t ny, std::size_t n, std::size_t d) {
  if (ny <= n * d + d + 1) fail(ErrorCode::BoundsTooSmall, "Ny too small for any offset");
  return ny - n * d - d - 1;
}

SieveSearch find_sieve(const ModBiSeries& f, std::size_t n, std::size_t d, std::size_t m_max, long degree_bound) {
  require_shape(n, d);
  if (f.ring().kind() != RingKind::Fp) fail(ErrorCode::RingMismatch, "sieve search reads rows over F_p");
  if (f.ny() <= m_max + n * d + d) {
    fail(ErrorCode::BoundsTooSmall, "Ny = " + std::to_string(f.ny()) + " must exceed mMax + nd + d = " +
                                        std::to_string(m_max + n * d + d));
  }
  SieveSearch search;
  search.m_max = m_max;
  for (std::size_t m = 0; m <= m_max; ++m) {
    if (!windows_hold(f, m, n, d)) continue;
    ++search.windows_passed;
    const auto pillars = sieve_pillars(m, n, d);
    if (std::any_of(pillars.begin(), pillars.end(), [&](std::size_t j) { return row_is_zero(f, j); })) continue;
    const auto rows = pillar_rows(f, pillars);
    if (static_cast<long>(f.nx()) < minimum_truncation(rows, degree_bound)) {
      ++search.bounds_skipped;
      continue;
    }
    ++search.pillar_solves;
    DependenceWitness w = rational_dependence(rows, degree_bound, static_cast<long>(f.nx()));
    if (w.found()) continue;
    search.certificate = SieveCertificate{f.ring().prime(), n, d, m, m_max, f.nx(), f.ny(),
                                          pillars, sieve_windows(m, n, d), std::move(w)};
    return search;
  }
  return search;
}

bool verify_sieve(const ModBiSeries& f, const SieveCertificate& cert) {
  if (cert.n < 1 || cert.d < 1) return false;
  if (cert.m + cert.n * cert.d + cert.d - 1 >= f.ny()) {
    fail(ErrorCode::IndexOutOfRange, "certificate rows reach past Ny = " + std::to_string(f.ny()));
  }
  if (f.ring().kind() != RingKind::Fp || f.ring().prime() != cert.p) return false;
  if (cert.pillars != sieve_pillars(cert.m, cert.n, cert.d)) return false;
  if (cert.zero_windows != sieve_windows(cert.m, cert.n, cert.d)) return false;
  if (!windows_hold(f, cert.m, cert.n, cert.d)) return false;
  const auto& w = cert.independence;
  if (w.found() || w.count != cert.n) return false;
  for (auto j : cert.pillars) {
    if (row_is_zero(f, j)) return false;
  }
  if (w.truncation > static_cast<long>(f.nx())) return false;
  const auto rows = pillar_rows(f, cert.pillars);
  if (w.truncation < minimum_truncation(rows, w.degree_bound)) return false;
  return !rational_dependence(rows, w.degree_bound, w.truncation).found();
}

PowersResult powers_independent_fp(const PolyFp& u, const PolyFp& v, std::size_t n) {
  const auto p = u.prime();
  if (v.prime() != p) fail(ErrorCode::PrimeMismatch, "U and V reduced at different primes");
  std::vector<PolyFp> vectors;
  std::size_t width = 1;
  for (std::size_t j = 0; j <= n; ++j) {
    vectors.push_back(u.pow(static_cast<unsigned>(n - j)) * v.pow(static_cast<unsigned>(j)));
    width = std::max<std::size_t>(width, static_cast<std::size_t>(vectors.back().degree() + 1));
  }
  // Columns are the vectors, so the kernel holds the relations (c_0..c_n).
  FpMatrix m(RingTag::prime_field(p), width, n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < width; ++i) m(i, j) = vectors[j][i];
  }
  auto kernel = kernel_basis_fp(m);
  PowersResult r;
  r.independent = kernel.empty();
  if (!r.independent) {
    r.relation = std::move(kernel.front());
    auto lead = std::find_if(r.relation.begin(), r.relation.end(), [](Residue c) { return c != 0; });
    const Residue inv = inverse_mod(*lead, p);
    for (auto& c : r.relation) c = mul_mod(c, inv, p);
  }
  return r;
}

PowersResult powers_independent(const std::vector<Integer>& u, const std::vector<Integer>& v, std::uint64_t p,
                                std::size_t n, bool check_rationality) {
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (check_rationality) {
    // U = cV over Q, including U = 0.
    IntMatrix pair(RingTag::integers(), 2, std::max(u.size(), v.size()));
    for (std::size_t i = 0; i < u.size(); ++i) pair(0, i) = u[i];
    for (std::size_t i = 0; i < v.size(); ++i) pair(1, i) = v[i];
    const bool v_zero = std::all_of(v.begin(), v.end(), [](const Integer& c) { return sgn(c) == 0; });
    if (!v_zero && rank_q(pair) < 2) fail(ErrorCode::ConstantRatio, "U/V is a constant");
    if (v.empty() || (v[0] != 1 && v[0] != -1)) fail(ErrorCode::RationalityViolated, "V(0) must be 1 or -1");
  }
  return powers_independent_fp(PolyFp::from_integers(p, u), PolyFp::from_integers(p, v), n);
}

SieveExperimentTrace sieve_vs_rank_experiment(const SieveExperimentParams& prm) {
  const auto p = prm.alpha.prime();
  if (prm.beta.prime() != p) fail(ErrorCode::PrimeMismatch, "alpha and beta live over different primes");
  require_shape(prm.n, prm.d);
  if (prm.rank_h + 1 > prm.d) fail(ErrorCode::PrecViolated, "rankH must be at most d - 1");
  if (prm.rank_g + 1 > prm.n) fail(ErrorCode::PrecViolated, "rankG must be at most n - 1");
  if (prm.alpha.is_zero() || prm.beta.is_zero()) fail(ErrorCode::PrecViolated, "alpha and beta must be nonzero");
  // alpha / beta = (a.num b.den) / (a.den b.num).
  const PolyFp u = prm.alpha.num() * prm.beta.den();
  const PolyFp v = prm.alpha.den() * prm.beta.num();
  if (!powers_independent_fp(u, v, std::max(prm.n, prm.d - 1)).independent) {
    fail(ErrorCode::PrecViolated, "powers of alpha/beta are dependent over F_" + std::to_string(p));
  }
  const RingTag fp = RingTag::prime_field(p);
  const std::size_t nx = prm.nx;
  const std::size_t ny = prm.ny;
  const ModSeries alpha = series_of(prm.alpha, nx);
  const ModSeries beta = series_of(prm.beta, nx);

  std::mt19937_64 rng(prm.seed);
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng); };
  auto lacunary = [&]() {
    ModSeries s(fp, nx);
    std::size_t e = uniform(0, 6);
    while (e < nx) {
      s.set(e, uniform(1, p - 1));
      e += uniform(3, 11);
    }
    return s;
  };
  // Row layouts, by seed mod 4: dense, two sparse densities, and a sieve-shaped
  // layout where G sits on a progression of step d past an early H block.
  static constexpr double kDensities[] = {1.0, 0.3, 0.08, 0.0};
  const bool progression = prm.seed % 4 == 3;
  const double density = kDensities[prm.seed % 4];
  std::bernoulli_distribution present(density);
  const std::size_t h_block = uniform(1, prm.d + 1);
  const std::size_t residue = uniform(0, prm.d - 1);

  std::vector<ModSeries> us, vs;
  for (std::size_t i = 0; i < prm.rank_h; ++i) us.push_back(lacunary());
  for (std::size_t i = 0; i < prm.rank_g; ++i) vs.push_back(lacunary());

  std::vector<std::vector<Residue>> h_coords(ny, std::vector<Residue>(prm.rank_h, 0));
  std::vector<ModSeries> h(ny, ModSeries(fp, nx)), g(ny, ModSeries(fp, nx));
  for (std::size_t j = 0; j < ny; ++j) {
    const bool with_h = progression ? j < h_block : present(rng);
    const bool with_g = progression ? j > h_block && j % prm.d == residue : present(rng);
    if (with_h) {
      for (std::size_t i = 0; i < prm.rank_h; ++i) {
        h_coords[j][i] = uniform(0, p - 1);
        if (h_coords[j][i] != 0) h[j] += us[i].scaled(h_coords[j][i]);
      }
    }
    if (with_g) {
      // K-coefficients rho(x) = a + b x.
      for (std::size_t i = 0; i < prm.rank_g; ++i) {
        ModSeries rho(fp, nx);
        rho.set(0, uniform(0, p - 1));
        rho.set(1, uniform(0, p - 1));
        g[j] += mul_trunc(rho, vs[i]);
      }
    }
  }

  ModBiSeries f(fp, nx, ny);
  for (std::size_t j = 0; j < ny; ++j) {
    ModSeries row = mul_trunc(beta, h[j]) + g[j];
    if (j > 0) row -= mul_trunc(alpha, h[j - 1]);
    f.set_row(j, std::move(row));
  }

  static const char* const kLayouts[] = {"dense", "sparse-0.3", "sparse-0.08", "progression"};
  SieveExperimentTrace trace{prm.alpha, prm.beta, kLayouts[prm.seed % 4], {}, 0, {}, 0, 0, 0, 0, std::nullopt};
  for (const auto& s : vs) trace.v_basis.push_back(LaurentTrunc::from_series(s));

  trace.m_max = default_m_max(ny, prm.n, prm.d);
  SieveSearch search = find_sieve(f, prm.n, prm.d, trace.m_max, prm.degree_bound);
  trace.windows_passed = search.windows_passed;
  trace.pillar_solves = search.pillar_solves;
  trace.bounds_skipped = search.bounds_skipped;
  trace.sieve = std::move(search.certificate);

  // lambda_l = sum_i b_i (alpha/beta)^i from a k-relation among the
  // coordinates of h_{m+ld}, ..., h_{m+ld+d-1}; m = 0 is the probe offset.
  const RationalFunction ratio = prm.alpha / prm.beta;
  for (std::size_t l = 0; l <= prm.n && (l + 1) * prm.d <= ny; ++l) {
    FpMatrix coords(fp, std::max<std::size_t>(prm.rank_h, 1), prm.d);
    for (std::size_t i = 0; i < prm.d; ++i) {
      for (std::size_t c = 0; c < prm.rank_h; ++c) coords(c, i) = h_coords[l * prm.d + i][c];
    }
    const auto kernel = kernel_basis_fp(coords);
    const auto& b = kernel.front();
    RationalFunction lambda = RationalFunction::zero(p);
    RationalFunction power = RationalFunction::one(p);
    for (std::size_t i = 0; i < prm.d; ++i) {
      if (b[i] != 0) lambda = lambda + power * RationalFunction::constant(p, b[i]);
      power = power * ratio;
    }
    if (lambda.is_zero()) fail(ErrorCode::PrecViolated, "lambda vanished although the powers are independent");
    trace.lambdas.push_back(std::move(lambda));
  }
  return trace;
}

}  // namespace h2cert
