#include "rieszkit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rieszkit {

ApproxApWitness approx_ap_witness(const FrequencySet& L, double eta, int ell, int R, std::int64_t Lmult) {
  if (!(eta > 0 && eta < 1)) throw std::invalid_argument("approx_ap_witness: eta must lie in (0, 1)");
  if (ell < 1) throw std::invalid_argument("approx_ap_witness: ell must be >= 1");
  if (R < 2) throw std::invalid_argument("approx_ap_witness: R must be >= 2");

  ApproxApWitness out;
  const double w = eta / std::ldexp(1.0, ell);
  const double target = w;
  const double total = bump_l1_total(w);

  bool found = false;
  for (int cap = 64; cap <= (1 << 22) && !found; cap *= 2) {
    out.coeffs = bump_coeffs_l1(w, cap);
    if (total - out.coeffs.l1_norm(cap) < target) found = true;
  }
  if (!found) throw std::runtime_error("approx_ap_witness: l1 tail target not reachable");

  out.M = l1_truncation_index(out.coeffs, total, target);
  out.l1_head = out.coeffs.l1_norm(out.M);
  out.l1_tail = total - out.l1_head;
  out.delta = choose_delta(out.coeffs, out.M, target);
  out.ap = extract_approx_ap(L, out.M, out.delta, Lmult);
  out.poly = witness_poly(out.coeffs, out.M, out.ap.s);

  const double c = static_cast<double>(out.ap.c);
  const IntervalSet layer = periodized_support(1.0 / c, w / (4.0 * c), kUnitWindow);
  out.S = complement_in(layer, kUnitWindow);
  out.energy_on_S = energy_on(out.poly, out.S);
  out.coeff_energy = out.coeffs.energy(out.M);
  out.pointwise_bound = 2 * w;
  out.bound = R * eta * eta * out.coeff_energy;
  out.satisfied = out.energy_on_S <= out.bound + 1e-12;

  const int samples = 2001;
  for (int k = 0; k < samples; ++k) {
    const double x = -0.5 + static_cast<double>(k) / (samples - 1);
    const cplx model = bump_function(w, c * x) * std::polar(1.0, 2.0 * std::numbers::pi * out.ap.d * x);
    out.max_pointwise_error = std::max(out.max_pointwise_error, std::abs(out.poly(x) - model));
  }
  return out;
}

}  // namespace rieszkit
