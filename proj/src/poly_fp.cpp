#include "h2cert/poly_fp.hpp"

#include "h2cert/error.hpp"

namespace h2cert {
namespace {

void same_prime(const PolyFp& a, const PolyFp& b) {
  if (a.prime() != b.prime()) {
    fail(ErrorCode::PrimeMismatch,
         "polynomials over F_" + std::to_string(a.prime()) + " and F_" + std::to_string(b.prime()));
  }
}

}  // namespace

PolyFp::PolyFp(std::uint64_t p) : p_(p) {}

PolyFp::PolyFp(std::uint64_t p, std::vector<Residue> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint64_t p, Residue c) { return PolyFp(p, {c}); }

PolyFp PolyFp::monomial(std::uint64_t p, Residue c, std::size_t degree) {
  std::vector<Residue> v(degree + 1, 0);
  v[degree] = c;
  return PolyFp(p, std::move(v));
}

PolyFp PolyFp::from_integers(std::uint64_t p, std::span<const Integer> coeffs) {
  std::vector<Residue> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(reduce(c, p));
  return PolyFp(p, std::move(v));
}

void PolyFp::trim() noexcept {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PolyFp PolyFp::monic() const {
  if (is_zero()) return *this;
  return scaled(inverse_mod(leading(), p_));
}

PolyFp PolyFp::scaled(Residue c) const {
  std::vector<Residue> v(coeffs_);
  for (auto& x : v) x = mul_mod(x, c % p_, p_);
  return PolyFp(p_, std::move(v));
}

PolyFp PolyFp::pow(unsigned e) const {
  PolyFp result = constant(p_, 1);
  PolyFp base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

PolyFp& PolyFp::operator+=(const PolyFp& rhs) {
  same_prime(*this, rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = add_mod(coeffs_[i], rhs.coeffs_[i], p_);
  trim();
  return *this;
}

PolyFp& PolyFp::operator-=(const PolyFp& rhs) {
  same_prime(*this, rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = sub_mod(coeffs_[i], rhs.coeffs_[i], p_);
  trim();
  return *this;
}

PolyFp operator*(const PolyFp& lhs, const PolyFp& rhs) {
  same_prime(lhs, rhs);
  if (lhs.is_zero() || rhs.is_zero()) return PolyFp(lhs.p_);
  const auto p = lhs.p_;
  std::vector<Residue> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(lhs.coeffs_[i], rhs.coeffs_[j], p), p);
    }
  }
  return PolyFp(p, std::move(out));
}

PolyFp PolyFp::operator-() const {
  std::vector<Residue> v(coeffs_);
  for (auto& x : v) x = neg_mod(x, p_);
  return PolyFp(p_, std::move(v));
}

std::string PolyFp::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    bool show_coeff = coeffs_[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(coeffs_[i]);
    if (i > 0) {
      if (show_coeff) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b) {
  same_prime(a, b);
  if (b.is_zero()) fail(ErrorCode::ZeroDenominator, "polynomial division by zero");
  const auto p = a.prime();
  if (a.degree() < b.degree()) return {PolyFp(p), a};
  std::vector<Residue> rem(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Residue> quo(rem.size() - db, 0);
  const Residue lead_inv = inverse_mod(b.leading(), p);
  for (std::size_t k = quo.size(); k-- > 0;) {
    Residue c = mul_mod(rem[k + db], lead_inv, p);
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[k + j] = sub_mod(rem[k + j], mul_mod(c, b[j], p), p);
    }
  }
  rem.resize(db);
  return {PolyFp(p, std::move(quo)), PolyFp(p, std::move(rem))};
}

PolyFp gcd(PolyFp a, PolyFp b) {
  same_prime(a, b);
  while (!b.is_zero()) {
    PolyFp r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace h2cert
