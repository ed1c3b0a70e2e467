#include "h2cert/bi_series.hpp"

namespace h2cert {

ModBiSeries reduce_mod(const ZBiSeries& f, const RingTag& target) {
  std::vector<ModSeries> rows;
  rows.reserve(f.ny());
  for (const auto& r : f.rows()) rows.push_back(reduce_mod(r, target));
  return ModBiSeries(target, f.nx(), std::move(rows));
}

}  // namespace h2cert
