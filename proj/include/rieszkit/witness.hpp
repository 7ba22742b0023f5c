#pragma once

#include <cstdint>

#include "rieszkit/construction.hpp"
#include "rieszkit/frequency_set.hpp"
#include "rieszkit/progressions.hpp"

namespace rieszkit {

/// Approximate-AP chain: triangle coefficients for w = eta / 2^ell, l^1
/// truncation, dyadic delta, AP extraction from L, energy on the window
/// minus the layer dilated by the extracted difference c.
struct ApproxApWitness {
  CoeffSequence coeffs;
  int M = 0;
  double l1_tail = 0;
  double l1_head = 0;
  double delta = 0;
  ApResult ap;
  TrigPolynomial poly;
  IntervalSet S;
  double energy_on_S = 0;
  double coeff_energy = 0;
  double pointwise_bound = 0;  // eta / 2^(ell-1)
  double max_pointwise_error = 0;
  double bound = 0;            // R eta^2 coeff_energy
  bool satisfied = false;
};

ApproxApWitness approx_ap_witness(const FrequencySet& L, double eta, int ell, int R,
                                  std::int64_t Lmult = 1);

}  // namespace rieszkit
