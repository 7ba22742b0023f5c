#include "rieszkit/duality.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "rieszkit/gram.hpp"
#include "rieszkit/hermitian_eigen.hpp"
#include "rieszkit/lattice.hpp"

namespace rieszkit {

namespace {

constexpr double kProjectionTol = 1e-10;
constexpr double kConsistencyTol = 1e-9;

void require_projection(const CMatrix& P) {
  if (!P.square()) throw std::invalid_argument("duality_check: P must be square");
  if (hermitian_defect(P) > kProjectionTol) throw std::invalid_argument("duality_check: P is not self-adjoint");
  if (max_abs_diff(P * P, P) > kProjectionTol) throw std::invalid_argument("duality_check: P is not idempotent");
}

}  // namespace

CMatrix orthonormal_range(const CMatrix& A, double tol) {
  const std::size_t n = A.rows();
  std::vector<std::vector<cplx>> cols(A.cols(), std::vector<cplx>(n));
  for (std::size_t j = 0; j < A.cols(); ++j) {
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = A(i, j);
  }
  std::vector<bool> used(A.cols(), false);
  std::vector<std::vector<cplx>> basis;

  while (basis.size() < n) {
    std::size_t pivot = A.cols();
    double best = tol;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      const double nrm = vector_norm(cols[j]);
      if (nrm > best) {
        best = nrm;
        pivot = j;
      }
    }
    if (pivot == A.cols()) break;
    used[pivot] = true;
    std::vector<cplx> q = cols[pivot];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        cplx proj = 0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(b[i]) * q[i];
        for (std::size_t i = 0; i < n; ++i) q[i] -= proj * b[i];
      }
    }
    const double nrm = vector_norm(q);
    if (nrm <= tol) continue;
    for (auto& v : q) v /= nrm;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      cplx proj = 0;
      for (std::size_t i = 0; i < n; ++i) proj += std::conj(q[i]) * cols[j][i];
      for (std::size_t i = 0; i < n; ++i) cols[j][i] -= proj * q[i];
    }
    basis.push_back(std::move(q));
  }

  CMatrix Q(n, basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) Q(i, k) = basis[k][i];
  }
  return Q;
}

DualityReport duality_check(const CMatrix& P, const std::vector<std::size_t>& J) {
  require_projection(P);
  const std::size_t n = P.rows();
  std::set<std::size_t> inJ;
  for (std::size_t j : J) {
    if (j >= n) throw std::out_of_range("duality_check: index outside 0..n-1");
    inJ.insert(j);
  }
  const std::vector<std::size_t> Jv(inJ.begin(), inJ.end());
  std::vector<std::size_t> Jc;
  for (std::size_t j = 0; j < n; ++j) {
    if (!inJ.count(j)) Jc.push_back(j);
  }

  DualityReport rep;
  rep.bessel_opt = Jv.empty() ? 0.0 : extremal_eigs(column_gram(select_columns(P, Jv))).lambda_max;

  const CMatrix Q = orthonormal_range(P);
  rep.rank = Q.cols();
  if (rep.rank == 0) {
    rep.frame_lower = 1.0;
  } else if (Jc.empty()) {
    rep.frame_lower = 0.0;
  } else {
    // frame operator on range(P) in the basis Q: C C^* with C = Q^* P e_{J^c}
    const CMatrix C = adjoint(Q) * select_columns(P, Jc);
    rep.frame_lower = extremal_eigs(C * adjoint(C)).lambda_min;
  }

  if (Jv.empty()) {
    rep.riesz_lower = 1.0;
  } else {
    const CMatrix IminusP = CMatrix::identity(n) - P;
    rep.riesz_lower = extremal_eigs(column_gram(select_columns(IminusP, Jv))).lambda_min;
  }

  const double target = 1.0 - rep.bessel_opt;
  rep.boundary = rep.bessel_opt <= kConsistencyTol || rep.bessel_opt >= 1.0 - kConsistencyTol;
  rep.consistent = std::fabs(rep.frame_lower - target) <= kConsistencyTol &&
                   std::fabs(rep.riesz_lower - target) <= kConsistencyTol;
  return rep;
}

CMatrix random_projection(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  if (k > n) throw std::invalid_argument("random_projection: rank exceeds dimension");
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix A(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) A(i, j) = cplx(g(rng), g(rng));
  }
  const CMatrix Q = orthonormal_range(A);
  CMatrix P = Q * adjoint(Q);
  for (std::size_t i = 0; i < n; ++i) {
    P(i, i) = std::real(P(i, i));
    for (std::size_t j = 0; j < i; ++j) P(j, i) = std::conj(P(i, j));
  }
  return P;
}

std::vector<std::size_t> random_subset(std::size_t n, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::size_t> J;
  for (std::size_t j = 0; j < n; ++j) {
    if (coin(rng)) J.push_back(j);
  }
  return J;
}

double complement_frame_bound(const ResidueSpec& omega_prime, const IntervalSet& V, std::int64_t K) {
  if (omega_prime.modulus < 1) throw std::invalid_argument("complement_frame_bound: modulus must be >= 1");
  if (K < 0) throw std::invalid_argument("complement_frame_bound: K must be >= 0");
  std::set<std::int64_t> residues;
  for (std::int64_t r : omega_prime.residues) {
    if (r < 0 || r >= omega_prime.modulus) {
      throw std::invalid_argument("complement_frame_bound: residue outside 0..modulus-1");
    }
    if (!residues.insert(r).second) throw std::invalid_argument("complement_frame_bound: duplicate residue");
  }
  if (!(measure(V) > 0)) throw std::invalid_argument("complement_frame_bound: V has measure zero");
  if (V.parts().front().lo < -0.5 - 1e-12 || V.parts().back().hi > 0.5 + 1e-12) {
    throw std::invalid_argument("complement_frame_bound: V must lie in [-1/2, 1/2]");
  }

  std::vector<double> omega;
  for (std::int64_t n = -K; n <= K; ++n) {
    if (!residues.count(mod_floor(n, omega_prime.modulus))) omega.push_back(static_cast<double>(n));
  }
  if (omega.empty()) return 1.0;
  return 1.0 - extremal_eigs(gram_matrix(omega, V)).lambda_max;
}

}  // namespace rieszkit
