#pragma once

#include <complex>
#include <string>
#include <vector>

#include "rieszkit/cmatrix.hpp"
#include "rieszkit/interval_set.hpp"
#include "rieszkit/rational.hpp"

namespace rieszkit {

inline const Interval kUnitWindow{-0.5, 0.5};

/// Window [-1/2, 1/2] in exact arithmetic.
ExactInterval exact_unit_window();

/// (union over m of [m period - halfwidth, m period + halfwidth]) cap window.
IntervalSet periodized_support(double period, double halfwidth, const Interval& window);
ExactIntervalSet periodized_support(const Rational& period, const Rational& halfwidth,
                                    const ExactInterval& window);

/// Bumps m / (ell alpha) +- eta / (4 ell 2^ell) inside the unit window.
IntervalSet build_V_layer(double alpha, double eta, int ell);
ExactIntervalSet build_V_layer(const Rational& alpha, const Rational& eta, int ell);

/// Union over ell = 1..ell_max of bumps m / (ell alpha) +- epsilon / (ell 2^(ell+3)).
/// ell_max = 0 gives the empty set.
IntervalSet build_V(double alpha, double epsilon, int ell_max);
ExactIntervalSet build_V(const Rational& alpha, const Rational& epsilon, int ell_max);

IntervalSet build_S(double alpha, double epsilon, int ell_max);
ExactIntervalSet build_S(const Rational& alpha, const Rational& epsilon, int ell_max);

/// Union over ell <= ell_max of V_eta^(ell), the set removed for a single eta.
IntervalSet build_V_eta(double alpha, double eta, int ell_max);

/// c_vectors[ell - 1] holds 2^ell positive integers.
IntervalSet build_V_improved(double alpha, double epsilon, int ell_max,
                             const std::vector<std::vector<long long>>& c_vectors);
ExactIntervalSet build_V_improved(const Rational& alpha, const Rational& epsilon, int ell_max,
                                  const std::vector<std::vector<long long>>& c_vectors);

/// c_r = r for r = 1..2^ell.
std::vector<std::vector<long long>> default_c_vectors(int ell_max);

/// One (ell, c) family of the improved set with parameter eta.
IntervalSet improved_family(double alpha, double eta, int ell, long long c);

/// Finitely supported coefficients a_j, j = -M..M.
struct CoeffSequence {
  int M = 0;
  std::vector<cplx> coeffs;  // coeffs[j + M]
  double width_w = 0;
  std::string kind;

  cplx at(int j) const;
  double energy(int upto) const;   // sum_{|j| <= upto} |a_j|^2
  double l1_norm(int upto) const;  // sum_{|j| <= upto} |a_j|
};

/// Fourier coefficients of the L^2-normalized 1-periodic box on [-w/4, w/4].
CoeffSequence box_coeffs(double w, int M);

/// Fourier coefficients of the L^2-normalized 1-periodic triangle on [-w/4, w/4].
CoeffSequence bump_coeffs_l1(double w, int M);

/// Exact l^1 norm of the full triangle sequence.
double bump_l1_total(double w);

/// Value of the triangle function itself.
double bump_function(double w, double x);

/// Smallest M~ with 1 - sum_{|j| <= M~} |a_j|^2 < tail_target.
/// Throws std::runtime_error if the stored support is too short.
int truncation_index(const CoeffSequence& coeffs, double tail_target);

/// Smallest M with bump_l1_total(w) - sum_{|j| <= M} |a_j| < tail_target.
int l1_truncation_index(const CoeffSequence& coeffs, double l1_total, double tail_target);

/// Largest delta = 2^-t, t = 1..60, with sin(pi delta / 2) < target / (2 sum_{|j|<=M} |a_j|).
double choose_delta(const CoeffSequence& coeffs, int M, double target);

struct TrigPolynomial {
  std::vector<double> freqs;
  std::vector<cplx> coeffs;

  cplx operator()(double x) const;
  double coeff_energy() const;
};

/// sum_{j=-M~}^{M~} a_j exp(2 pi i freqs[j + M~] x).
TrigPolynomial witness_poly(const CoeffSequence& coeffs, int M_tilde, const std::vector<double>& freqs);

/// Integral of |poly|^2 over S.
double energy_on(const TrigPolynomial& poly, const IntervalSet& S);

struct WitnessReport {
  double alpha = 0;
  double epsilon = 0;
  double eta = 0;
  int ell = 0;
  int P = 0;
  int R = 0;
  int M_tilde = 0;
  double energy_on_S = 0;
  double coeff_energy = 0;
  double tail = 0;
  double bound = 0;
  bool satisfied = false;
};

/// energy_on_S <= R eta / 2^P_or_ell * coeff_energy (+1e-12).
WitnessReport verify_witness(const TrigPolynomial& poly, const IntervalSet& S, int R, double eta,
                             int P_or_ell, double coeff_energy);

/// Full exact-AP chain: box coefficients for w = eta alpha / 2^P, truncation at
/// eta / 2^P, AP frequencies P alpha j + d, energy on S.
struct ExactApWitness {
  WitnessReport report;
  CoeffSequence coeffs;
  TrigPolynomial poly;
  IntervalSet S;
  double truncated_energy = 0;
  double tail = 0;
  double energy_off_layer = 0;  // energy on the window minus the single layer V_eta^(P)
};

ExactApWitness exact_ap_witness(double alpha, double eta, int P, int R, double d, const IntervalSet& S);

/// Box coefficients long enough for truncation_index(., tail_target) to succeed.
CoeffSequence box_coeffs_for_tail(double w, double tail_target);

}  // namespace rieszkit
