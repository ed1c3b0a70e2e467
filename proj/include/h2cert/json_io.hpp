#pragma once

#include <json.hpp>

#include "h2cert/construction.hpp"
#include "h2cert/dependence.hpp"
#include "h2cert/homology.hpp"
#include "h2cert/rank_analysis.hpp"
#include "h2cert/sieve.hpp"

namespace h2cert {

using Json = nlohmann::ordered_json;

// Integers fitting in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& v);
Json rational_json(const Rational& v);
Json integers_json(const std::vector<Integer>& v);
Json poly_json(const PolyFp& p);
Json ratfunc_json(const RationalFunction& r);
Json laurent_json(const LaurentTrunc& l);
Json ring_json(const RingTag& r);

template <class C>
Json series_json(const TruncSeries<C>& s);
template <class C>
Json bi_series_json(const BiSeries<C>& f);

Json matrix_json(const IntMatrix& m);  // sparse: [[row, col, value], ...]
Json dependence_json(const DependenceWitness& w);
Json certificate_json(const SieveCertificate& c);
SieveCertificate certificate_from_json(const Json& j);
Json rank_json(const RankReport& r);
Json presentation_json(const CoinvariantPresentation& p);

}  // namespace h2cert
