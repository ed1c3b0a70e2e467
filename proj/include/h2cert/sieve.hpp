#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "h2cert/bi_series.hpp"
#include "h2cert/dependence.hpp"
#include "h2cert/ratfunc.hpp"

namespace h2cert {

/// Offset m with f_{m+ld+i} = 0 for 0 <= l <= n, 1 <= i <= d-1, and pillar
/// rows f_{m+d}, ..., f_{m+nd} independent over F_p(x) at the recorded bounds.
struct SieveCertificate {
  std::uint64_t p = 0;
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t m = 0;
  std::size_t m_max = 0;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<std::size_t> pillars;
  std::vector<std::pair<std::size_t, std::size_t>> zero_windows;  // inclusive row ranges
  DependenceWitness independence;
};

struct SieveSearch {
  std::optional<SieveCertificate> certificate;
  std::size_t m_max = 0;
  std::size_t windows_passed = 0;   // offsets whose zero windows held
  std::size_t pillar_solves = 0;    // offsets whose nonzero pillars went to the solver
  std::size_t bounds_skipped = 0;   // offsets the solver could not decide at (D, N)
};

std::vector<std::size_t> sieve_pillars(std::size_t m, std::size_t n, std::size_t d);
std::vector<std::pair<std::size_t, std::size_t>> sieve_windows(std::size_t m, std::size_t n, std::size_t d);

/// Largest offset that fits: Ny - nd - d - 1.
std::size_t default_m_max(std::size_t ny, std::size_t n, std::size_t d);

/// First m in [0, m_max] carrying a sieve. Pillar independence is decided by
/// rational_dependence at (degree_bound, Nx).
SieveSearch find_sieve(const ModBiSeries& f, std::size_t n, std::size_t d, std::size_t m_max, long degree_bound);

bool verify_sieve(const ModBiSeries& f, const SieveCertificate& cert);

/// Coefficient vectors of U^{n-j} V^j mod p, j = 0..n, tested for F_p-linear
/// independence. A dependence comes back as (c_0, ..., c_n), first nonzero 1.
struct PowersResult {
  bool independent = false;
  std::vector<Residue> relation;
};

PowersResult powers_independent_fp(const PolyFp& u, const PolyFp& v, std::size_t n);
PowersResult powers_independent(const std::vector<Integer>& u, const std::vector<Integer>& v, std::uint64_t p,
                                std::size_t n, bool check_rationality = true);

struct SieveExperimentParams {
  RationalFunction alpha{PolyFp(5, {0, 1})};
  RationalFunction beta{PolyFp(5, {1, 1})};
  std::size_t d = 5;
  std::size_t n = 5;
  std::size_t rank_h = 4;
  std::size_t rank_g = 4;
  std::uint64_t seed = 1;
  std::size_t nx = 96;
  std::size_t ny = 96;
  long degree_bound = 4;
};

struct SieveExperimentTrace {
  RationalFunction alpha;
  RationalFunction beta;
  std::string layout;  // dense | sparse-0.3 | sparse-0.08 | progression
  std::vector<LaurentTrunc> v_basis;
  std::size_t lambda_offset = 0;
  std::vector<RationalFunction> lambdas;
  std::size_t m_max = 0;
  std::size_t windows_passed = 0;
  std::size_t pillar_solves = 0;
  std::size_t bounds_skipped = 0;
  std::optional<SieveCertificate> sieve;  // set only when a sieve was found
  bool contradiction() const noexcept { return sieve.has_value(); }
};

/// F = (beta - alpha y) H + G with H of k-rank <= rank_h and G of K-rank
/// <= rank_g, then a full find_sieve scan.
SieveExperimentTrace sieve_vs_rank_experiment(const SieveExperimentParams& params);

}  // namespace h2cert
