#include "rieszkit/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace rieszkit {

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  CMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
  }
  return out;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  }
  return out;
}

std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: shape mismatch");
  std::vector<cplx> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) s += std::norm(a.data()[i]);
  return std::sqrt(s);
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0;
  for (std::size_t i = 0; i < a.rows() * a.cols(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double vector_norm(const std::vector<cplx>& x) {
  double s = 0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

double hermitian_defect(const CMatrix& a) {
  if (!a.square()) throw std::invalid_argument("hermitian_defect: matrix not square");
  double m = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  }
  return m;
}

CMatrix select_columns(const CMatrix& a, const std::vector<std::size_t>& idx) {
  CMatrix out(a.rows(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c) {
    if (idx[c] >= a.cols()) throw std::out_of_range("select_columns: index out of range");
    for (std::size_t i = 0; i < a.rows(); ++i) out(i, c) = a(i, idx[c]);
  }
  return out;
}

CMatrix column_gram(const CMatrix& b) {
  CMatrix g(b.cols(), b.cols());
  for (std::size_t m = 0; m < b.cols(); ++m) {
    for (std::size_t n = 0; n <= m; ++n) {
      cplx s = 0;
      for (std::size_t i = 0; i < b.rows(); ++i) s += std::conj(b(i, m)) * b(i, n);
      g(m, n) = s;
      g(n, m) = std::conj(s);
    }
    g(m, m) = std::real(g(m, m));
  }
  return g;
}

}  // namespace rieszkit
