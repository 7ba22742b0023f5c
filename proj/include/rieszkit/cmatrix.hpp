#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rieszkit {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
std::vector<cplx> matvec(const CMatrix& a, const std::vector<cplx>& x);

double frobenius_norm(const CMatrix& a);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double vector_norm(const std::vector<cplx>& x);

/// Largest |A - A^*| entry.
double hermitian_defect(const CMatrix& a);

/// Columns idx of A as a new matrix.
CMatrix select_columns(const CMatrix& a, const std::vector<std::size_t>& idx);

/// B^* B for the given column block.
CMatrix column_gram(const CMatrix& b);

}  // namespace rieszkit
