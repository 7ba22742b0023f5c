#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace oracle {

using cmat = std::vector<std::vector<std::complex<double>>>;

// Number of eigenvalues of the Hermitian matrix A below sigma, from the
// signs of the LDL^H pivots of A - sigma I (Sylvester inertia).
inline std::size_t count_below(const cmat& A, double sigma) {
  const std::size_t n = A.size();
  cmat B = A;
  for (std::size_t i = 0; i < n; ++i) B[i][i] -= sigma;
  std::size_t neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    double d = B[k][k].real();
    if (d == 0) d = -1e-300;
    if (d < 0) ++neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::complex<double> l = B[i][k] / d;
      for (std::size_t j = k + 1; j < n; ++j) B[i][j] -= l * std::conj(B[j][k]);
    }
  }
  return neg;
}

inline double bound(const cmat& A) {
  double s = 0;
  for (const auto& row : A)
    for (const auto& v : row) s += std::norm(v);
  return std::sqrt(s) + 1;
}

// k-th smallest eigenvalue (0-based) by bisection.
inline double eigenvalue(const cmat& A, std::size_t k, double tol = 1e-13) {
  double lo = -bound(A), hi = bound(A);
  while (hi - lo > tol * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(A, mid) > k) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
