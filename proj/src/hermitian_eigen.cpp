#include "rieszkit/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rieszkit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelTol = 1e-15;

double residual(const CMatrix& A, const std::vector<cplx>& v, double lambda) {
  std::vector<cplx> Av = matvec(A, v);
  for (std::size_t i = 0; i < v.size(); ++i) Av[i] -= lambda * v[i];
  return vector_norm(Av);
}

std::vector<cplx> column(const CMatrix& V, std::size_t k) {
  std::vector<cplx> v(V.rows());
  for (std::size_t i = 0; i < V.rows(); ++i) v[i] = V(i, k);
  return v;
}

}  // namespace

EigenDecomposition jacobi_eigh(const CMatrix& input) {
  if (!input.square()) throw std::invalid_argument("jacobi_eigh: matrix not square");
  const std::size_t n = input.rows();
  if (n == 0) throw std::invalid_argument("jacobi_eigh: dimension 0");
  const double norm = frobenius_norm(input);
  if (hermitian_defect(input) > 1e-12 * std::max(norm, 1.0)) {
    throw std::invalid_argument("jacobi_eigh: matrix not Hermitian");
  }

  CMatrix A = input;
  for (std::size_t i = 0; i < n; ++i) A(i, i) = std::real(A(i, i));
  CMatrix V = CMatrix::identity(n);
  const double floor = 1e-20 * norm;

  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = A(p, q);
        const double b = std::abs(apq);
        const double app = std::real(A(p, p));
        const double aqq = std::real(A(q, q));
        if (b <= kRelTol * std::sqrt(std::fabs(app * aqq)) + floor) continue;
        rotated = true;

        const cplx u = apq / b;
        const cplx ub = std::conj(u);
        const double tau = (aqq - app) / (2 * b);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::fabs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = A(k, p);
          const cplx akq = A(k, q);
          const cplx nkp = c * akp - s * ub * akq;
          const cplx nkq = s * akp + c * ub * akq;
          A(k, p) = nkp;
          A(k, q) = nkq;
          A(p, k) = std::conj(nkp);
          A(q, k) = std::conj(nkq);
        }
        A(p, p) = app - t * b;
        A(q, q) = aqq + t * b;
        A(p, q) = 0;
        A(q, p) = 0;

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = V(k, p);
          const cplx vkq = V(k, q);
          V(k, p) = c * vkp - s * ub * vkq;
          V(k, q) = s * vkp + c * ub * vkq;
        }
      }
    }
    if (!rotated) break;
  }
  if (sweep == kMaxSweeps) throw std::runtime_error("jacobi_eigh: no convergence after 100 sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::real(A(a, a)) < std::real(A(b, b)); });

  EigenDecomposition out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = std::real(A(order[k], order[k]));
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = V(i, order[k]);
  }
  return out;
}

ExtremalEigs extremal_eigs(const CMatrix& A) {
  const EigenDecomposition eig = jacobi_eigh(A);
  ExtremalEigs ex;
  const std::size_t n = eig.values.size();
  ex.lambda_min = eig.values.front();
  ex.lambda_max = eig.values.back();
  ex.v_min = column(eig.vectors, 0);
  ex.v_max = column(eig.vectors, n - 1);
  ex.residual_min = residual(A, ex.v_min, ex.lambda_min);
  ex.residual_max = residual(A, ex.v_max, ex.lambda_max);
  ex.sweeps = eig.sweeps;
  return ex;
}

}  // namespace rieszkit
