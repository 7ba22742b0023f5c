#include "rieszkit/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rieszkit/kernels.hpp"

namespace rieszkit {

namespace {

double sinc(double u) {
  if (u == 0) return 1.0;
  const double x = std::numbers::pi * u;
  return std::sin(x) / x;
}

}  // namespace

cplx exp_inner(double theta, const IntervalSet& S) {
  cplx total = 0;
  for (const auto& iv : S.parts()) {
    const double len = iv.hi - iv.lo;
    const double phase = std::numbers::pi * theta * (iv.lo + iv.hi);
    total += std::polar(len * sinc(theta * len), phase);
  }
  return total;
}

GramMatrix gram_matrix(const std::vector<double>& freqs, const IntervalSet& S) {
  std::vector<double> sorted = freqs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("gram_matrix: duplicate frequencies");
  }
  GramMatrix G;
  G.freqs = freqs;
  G.set = S;
  omp::gram_fill(freqs, S, G.entries);
  return G;
}

GramMatrix gram_matrix(const FrequencySet& freqs, const IntervalSet& S) {
  return gram_matrix(freqs.points, S);
}

double quadratic_energy(const GramMatrix& G, const std::vector<cplx>& c) {
  return omp::quadratic_form(G.entries, c);
}

ExtremalEigs extremal_eigs(const GramMatrix& G) {
  return extremal_eigs(G.entries);
}

std::vector<double> riesz_lower_trajectory(const std::vector<FrequencySet>& family,
                                           const IntervalSet& S) {
  std::vector<double> out;
  out.reserve(family.size());
  for (const auto& F : family) out.push_back(extremal_eigs(gram_matrix(F, S)).lambda_min);
  return out;
}

}  // namespace rieszkit
