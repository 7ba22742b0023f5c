#pragma once

#include <vector>

#include "rieszkit/cmatrix.hpp"

namespace rieszkit {

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // column k belongs to values[k]
  int sweeps = 0;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
EigenDecomposition jacobi_eigh(const CMatrix& A);

struct ExtremalEigs {
  double lambda_min = 0;
  double lambda_max = 0;
  double residual_min = 0;  // ||A v - lambda v|| for the returned pairs
  double residual_max = 0;
  std::vector<cplx> v_min;
  std::vector<cplx> v_max;
  int sweeps = 0;
};

ExtremalEigs extremal_eigs(const CMatrix& A);

}  // namespace rieszkit
