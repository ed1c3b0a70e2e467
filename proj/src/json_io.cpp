#include "h2cert/json_io.hpp"

#include "h2cert/series_text.hpp"

namespace h2cert {

Json integer_json(const Integer& v) {
  if (auto small = to_int64(v)) return *small;
  return v.get_str();
}

Json rational_json(const Rational& v) { return to_string(v); }

Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_json(x));
  return out;
}

Json poly_json(const PolyFp& p) {
  return Json{{"coeffs", std::vector<Residue>(p.coeffs().begin(), p.coeffs().end())}, {"text", p.to_string()}};
}

Json ratfunc_json(const RationalFunction& r) {
  return Json{{"p", r.prime()}, {"num", poly_json(r.num())}, {"den", poly_json(r.den())}, {"text", r.to_string()}};
}

Json laurent_json(const LaurentTrunc& l) {
  return Json{{"p", l.prime()},
              {"lowExp", l.low_exp()},
              {"order", l.order()},
              {"coeffs", std::vector<Residue>(l.coeffs().begin(), l.coeffs().end())}};
}

Json ring_json(const RingTag& r) { return r.name(); }

template <class C>
Json series_json(const TruncSeries<C>& s) {
  return Json{{"ring", ring_json(s.ring())}, {"order", s.order()}, {"terms", format_series(s)}};
}

template <class C>
Json bi_series_json(const BiSeries<C>& f) {
  return Json{{"ring", ring_json(f.ring())}, {"nx", f.nx()}, {"ny", f.ny()}, {"terms", format_bi_series(f)}};
}

template Json series_json(const ZSeries&);
template Json series_json(const ModSeries&);
template Json bi_series_json(const ZBiSeries&);
template Json bi_series_json(const ModBiSeries&);

Json matrix_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) != 0) entries.push_back(Json::array({i, j, integer_json(m(i, j))}));
    }
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json dependence_json(const DependenceWitness& w) {
  Json relation = nullptr;
  if (w.found()) {
    relation = Json::array();
    for (const auto& r : w.relation) relation.push_back(poly_json(r));
  }
  return Json{{"p", w.p},
              {"count", w.count},
              {"degreeBound", w.degree_bound},
              {"truncation", w.truncation},
              {"unknowns", w.unknowns},
              {"equations", w.equations},
              {"dependent", w.found()},
              {"relation", std::move(relation)}};
}

Json certificate_json(const SieveCertificate& c) {
  Json windows = Json::array();
  for (const auto& [lo, hi] : c.zero_windows) windows.push_back(Json::array({lo, hi}));
  return Json{{"p", c.p},   {"n", c.n},           {"d", c.d},   {"m", c.m},
              {"mMax", c.m_max}, {"nx", c.nx},     {"ny", c.ny}, {"pillars", c.pillars},
              {"zeroWindows", std::move(windows)}, {"independence", dependence_json(c.independence)}};
}

SieveCertificate certificate_from_json(const Json& j) {
  try {
    SieveCertificate c;
    c.p = j.at("p").get<std::uint64_t>();
    c.n = j.at("n").get<std::size_t>();
    c.d = j.at("d").get<std::size_t>();
    c.m = j.at("m").get<std::size_t>();
    c.m_max = j.value("mMax", c.m);
    c.nx = j.at("nx").get<std::size_t>();
    c.ny = j.at("ny").get<std::size_t>();
    c.pillars = j.at("pillars").get<std::vector<std::size_t>>();
    for (const auto& w : j.at("zeroWindows")) c.zero_windows.emplace_back(w.at(0).get<std::size_t>(), w.at(1).get<std::size_t>());
    const Json& dep = j.at("independence");
    c.independence.p = dep.at("p").get<std::uint64_t>();
    c.independence.count = dep.at("count").get<std::size_t>();
    c.independence.degree_bound = dep.at("degreeBound").get<long>();
    c.independence.truncation = dep.at("truncation").get<long>();
    c.independence.unknowns = dep.value("unknowns", std::size_t{0});
    c.independence.equations = dep.value("equations", std::size_t{0});
    if (dep.value("dependent", false)) {
      for (const auto& r : dep.at("relation")) {
        c.independence.relation.emplace_back(c.independence.p, r.at("coeffs").get<std::vector<Residue>>());
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed certificate: ") + e.what());
  }
}

Json rank_json(const RankReport& r) {
  Json out{{"ring", ring_json(r.ring)}, {"Nx", r.nx}, {"Ny", r.ny}, {"rank", r.rank}};
  if (r.invariant_factors) out["factors"] = integers_json(*r.invariant_factors);
  out["stabilized"] = r.stabilized;
  return out;
}

Json presentation_json(const CoinvariantPresentation& p) {
  Json relations = Json::array();
  for (std::size_t i = 0; i < p.relations.rows(); ++i) {
    Json row = Json::object();
    for (std::size_t j = 0; j < p.relations.cols(); ++j) {
      if (sgn(p.relations(i, j)) != 0) row[p.generator_names.at(j)] = integer_json(p.relations(i, j));
    }
    relations.push_back(std::move(row));
  }
  return Json{{"generators", p.generator_names},
              {"relations", std::move(relations)},
              {"invariantFactors", integers_json(p.smith.invariant_factors)},
              {"freeRank", p.free_rank},
              {"torsion", integers_json(p.torsion)}};
}

}  // namespace h2cert
