#include "rieszkit/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace rieszkit {

IntegerSet lattice_indices(const FrequencySet& L, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("round_to_lattice: N must be >= 1");
  if (L.size() >= 2 && !(1.0 / static_cast<double>(N) < separation(L))) {
    throw std::invalid_argument("round_to_lattice: 1/N must be smaller than the separation");
  }
  IntegerSet out;
  out.reserve(L.size());
  for (double x : L.points) {
    const double scaled = x * static_cast<double>(N);
    if (std::fabs(scaled) > static_cast<double>(kIntegerLimit)) {
      throw std::invalid_argument("round_to_lattice: scaled point exceeds 2^40");
    }
    // nearest integer, exact midpoints going down
    out.push_back(static_cast<std::int64_t>(std::ceil(scaled - 0.5)));
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i] <= out[i - 1]) throw std::logic_error("round_to_lattice: collision after rounding");
  }
  return out;
}

FrequencySet round_to_lattice(const FrequencySet& L, std::int64_t N) {
  const IntegerSet k = lattice_indices(L, N);
  FrequencySet out;
  out.meta = L.meta;
  out.points.reserve(k.size());
  for (std::int64_t v : k) out.points.push_back(static_cast<double>(v) / static_cast<double>(N));
  return out;
}

ResidueReport residue_classes(const IntegerSet& O, std::int64_t N) {
  if (N < 1) throw std::invalid_argument("residue_classes: N must be >= 1");
  ResidueReport rep;
  rep.modulus = N;
  for (std::int64_t v : O) rep.classes[mod_floor(v, N)].push_back(v);
  std::size_t best = 0;
  for (const auto& [u, members] : rep.classes) {
    if (members.size() > best) {
      best = members.size();
      rep.densest = u;
    }
  }
  return rep;
}

ResidueReport residue_classes(const FrequencySet& O, std::int64_t N) {
  return residue_classes(to_integers(O), N);
}

}  // namespace rieszkit
