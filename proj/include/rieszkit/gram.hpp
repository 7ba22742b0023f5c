#pragma once

#include <complex>
#include <vector>

#include "rieszkit/cmatrix.hpp"
#include "rieszkit/frequency_set.hpp"
#include "rieszkit/hermitian_eigen.hpp"
#include "rieszkit/interval_set.hpp"

namespace rieszkit {

/// Integral of exp(2 pi i theta x) over S.
cplx exp_inner(double theta, const IntervalSet& S);

struct GramMatrix {
  std::vector<double> freqs;
  IntervalSet set;
  CMatrix entries;  // G[m][n] = integral over S of exp(2 pi i (lambda_m - lambda_n) x)
};

/// Rejects duplicate frequencies.
GramMatrix gram_matrix(const std::vector<double>& freqs, const IntervalSet& S);
GramMatrix gram_matrix(const FrequencySet& freqs, const IntervalSet& S);

/// c^* G c.
double quadratic_energy(const GramMatrix& G, const std::vector<cplx>& c);

ExtremalEigs extremal_eigs(const GramMatrix& G);

/// lambda_min of the Gram matrix for each truncation.
std::vector<double> riesz_lower_trajectory(const std::vector<FrequencySet>& family,
                                           const IntervalSet& S);

}  // namespace rieszkit
