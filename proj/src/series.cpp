#include "h2cert/series.hpp"

namespace h2cert {

ModSeries reduce_mod(const ZSeries& f, const RingTag& target) {
  if (!target.is_modular()) fail(ErrorCode::RingMismatch, "reduction target must be F_p or Z/p^e, got " + target.name());
  std::vector<Residue> out;
  out.reserve(f.order());
  for (const auto& c : f.coeffs()) out.push_back(reduce(c, target.modulus()));
  return ModSeries(target, std::move(out));
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  LaurentPoly q;
  q.add_term(c, exponent);
  return q;
}

void LaurentPoly::add_term(const Integer& c, long exponent) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(c, e);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(-c, e);
  return out;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ca * cb, ea + eb);
  }
  return out;
}

ZSeries phi_map(const LaurentPoly& q, std::size_t order) {
  const RingTag z = RingTag::integers();
  ZSeries one_plus_x = ZSeries::one(z, order);
  if (order > 1) one_plus_x.set(1, 1);
  const ZSeries inverse = invert_unit(one_plus_x);

  ZSeries out(z, order);
  for (const auto& [e, c] : q.terms()) {
    const ZSeries& base = e >= 0 ? one_plus_x : inverse;
    const auto k = static_cast<unsigned>(e >= 0 ? e : -e);
    out += pow_trunc(base, k).scaled(c);
  }
  return out;
}

}  // namespace h2cert
