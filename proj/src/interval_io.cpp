#include "rieszkit/interval_io.hpp"

#include <stdexcept>

#include "rieszkit/kernels.hpp"

namespace rieszkit {

nlohmann::json to_json(const IntervalSet& S) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& iv : S.parts()) parts.push_back({iv.lo, iv.hi});
  return {{"parts", parts}, {"measure", measure(S)}};
}

IntervalSet interval_set_from_json(const nlohmann::json& j) {
  std::vector<Interval> parts;
  for (const auto& p : j.at("parts")) {
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("interval JSON: expected [lo, hi] pairs");
    parts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return normalize(std::move(parts));
}

nlohmann::json to_json(const FrequencySet& L) {
  return {{"points", L.points}, {"meta", L.meta}};
}

FrequencySet frequency_set_from_json(const nlohmann::json& j) {
  return make_frequency_set(j.at("points").get<std::vector<double>>(), j.value("meta", std::string{}));
}

void write_indicator_csv(std::ostream& out, const IntervalSet& S, const Interval& window, std::size_t n) {
  const auto chi = omp::sample_indicator(S, window.lo, window.hi, n);
  const double h = (window.hi - window.lo) / static_cast<double>(n - 1);
  out << "x,chi\n";
  out.precision(17);
  for (std::size_t k = 0; k < n; ++k) {
    out << window.lo + h * static_cast<double>(k) << ',' << static_cast<int>(chi[k]) << '\n';
  }
}

}  // namespace rieszkit
