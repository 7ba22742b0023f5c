#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rieszkit/cmatrix.hpp"
#include "rieszkit/interval_set.hpp"

namespace rieszkit {

struct DualityReport {
  double bessel_opt = 0;   // lambda_max of the Gram of {P e_j : j in J}
  double frame_lower = 0;  // lower frame bound of {P e_j : j not in J} on range(P)
  double riesz_lower = 0;  // lambda_min of the Gram of {(I - P) e_j : j in J}
  std::size_t rank = 0;
  bool boundary = false;   // bessel_opt is 0 or 1
  bool consistent = false;
};

/// P must satisfy P^2 = P = P^* within 1e-10; J holds zero-based indices.
DualityReport duality_check(const CMatrix& P, const std::vector<std::size_t>& J);

/// Orthogonal projection onto the span of k random complex Gaussian vectors.
CMatrix random_projection(std::size_t n, std::size_t k, std::mt19937_64& rng);

/// Random subset of {0, ..., n-1}, each index kept with probability 1/2.
std::vector<std::size_t> random_subset(std::size_t n, std::mt19937_64& rng);

/// Orthonormal basis of the column space (pivoted Gram-Schmidt, rank tol).
CMatrix orthonormal_range(const CMatrix& A, double tol = 1e-10);

struct ResidueSpec {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> residues;  // classes forming Omega'
};

/// 1 - lambda_max(Gram(Omega cap [-K, K], V)) with Omega = Z minus Omega'.
/// Upper estimate of the lower frame bound of E(Omega') on L^2(V).
double complement_frame_bound(const ResidueSpec& omega_prime, const IntervalSet& V, std::int64_t K);

}  // namespace rieszkit
