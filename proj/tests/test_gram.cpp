#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles/inertia_bisection.hpp"
#include "oracles/quadrature.hpp"
#include "rieszkit/construction.hpp"
#include "rieszkit/gram.hpp"
#include "rieszkit/hermitian_eigen.hpp"

using namespace rieszkit;
using std::numbers::pi;

namespace {

IntervalSet random_subset_of_window(std::mt19937_64& rng, int count) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::vector<Interval> parts;
  for (int i = 0; i < count; ++i) {
    double a = u(rng), b = u(rng);
    if (b < a) std::swap(a, b);
    parts.push_back({a, a + 0.2 * (b - a)});
  }
  return normalize(std::move(parts));
}

CMatrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  CMatrix A(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    A(i, i) = g(rng);
    for (std::size_t j = 0; j < i; ++j) {
      A(i, j) = cplx(g(rng), g(rng));
      A(j, i) = std::conj(A(i, j));
    }
  }
  return A;
}

oracle::cmat to_oracle(const CMatrix& A) {
  oracle::cmat out(A.rows(), std::vector<cplx>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[i][j] = A(i, j);
  return out;
}

}  // namespace

TEST_CASE("exp_inner closed form") {
  const auto W = IntervalSet::single(-0.5, 0.5);
  CHECK(std::abs(exp_inner(0.0, W) - cplx(1, 0)) <= 1e-15);
  for (int k = 1; k <= 5; ++k) CHECK(std::abs(exp_inner(k, W)) <= 1e-15);
  const auto H = IntervalSet::single(0, 0.5);
  CHECK(std::abs(exp_inner(1.0 / 3, H) - oracle::exp_integral(1.0 / 3, H)) <= 1e-10);
  CHECK(std::abs(exp_inner(1e-300, H) - cplx(0.5, 0)) <= 1e-15);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> th(-40, 40);
  for (int i = 0; i < 100; ++i) {
    const auto S = random_subset_of_window(rng, 1 + i % 7);
    const double theta = th(rng);
    const cplx v = exp_inner(theta, S);
    CHECK(std::abs(v - oracle::exp_integral(theta, S)) <= 1e-10);
    CHECK(std::abs(v) <= measure(S) + 1e-15);
  }
}

TEST_CASE("Gram matrix basics") {
  std::vector<double> Z;
  for (int k = -8; k <= 8; ++k) Z.push_back(k);
  const auto G = gram_matrix(Z, IntervalSet::single(-0.5, 0.5));
  CHECK(max_abs_diff(G.entries, CMatrix::identity(Z.size())) <= 1e-15);
  const auto e = extremal_eigs(G);
  CHECK(e.lambda_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.lambda_max == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(gram_matrix(std::vector<double>{1.0, 2.0, 1.0}, G.set), std::invalid_argument);

  const auto S = build_S(1.0, 0.5, 6);
  const auto one = extremal_eigs(gram_matrix(std::vector<double>{0.7}, S));
  CHECK(one.lambda_min == doctest::Approx(measure(S)).epsilon(1e-14));
  CHECK(one.lambda_max == doctest::Approx(measure(S)).epsilon(1e-14));

  const auto GS = gram_matrix(Z, S);
  CHECK(hermitian_defect(GS.entries) == 0.0);
  for (std::size_t i = 0; i < Z.size(); ++i) CHECK(GS.entries(i, i).real() == doctest::Approx(measure(S)).epsilon(1e-14));
  CHECK(extremal_eigs(GS).lambda_min >= -1e-10);
}

TEST_CASE("quadratic form equals witness energy") {
  const auto S = build_S(1.0, 0.5, 8);
  const auto w = exact_ap_witness(1.0, 0.25, 2, 3, 0.0, S);
  const auto G = gram_matrix(w.poly.freqs, S);
  CHECK(quadratic_energy(G, w.poly.coeffs) == doctest::Approx(w.report.energy_on_S).epsilon(1e-10));
  // A direct quadrature of |f|^2 over S.
  double q = 0;
  for (const auto& iv : S.parts())
    q += oracle::integrate([&](double x) { return std::norm(w.poly(x)); }, iv.lo, iv.hi, 512);
  CHECK(std::fabs(q - w.report.energy_on_S) <= 1e-9);
}

TEST_CASE("Jacobi solver against inertia bisection") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 50; ++t) {
    const CMatrix A = random_hermitian(rng, 8);
    const auto dec = jacobi_eigh(A);
    const auto oA = to_oracle(A);
    for (std::size_t k = 0; k < 8; ++k) CHECK(std::fabs(dec.values[k] - oracle::eigenvalue(oA, k)) <= 1e-8);
    const auto e = extremal_eigs(A);
    CHECK(e.residual_min <= 1e-9 * frobenius_norm(A));
    CHECK(e.residual_max <= 1e-9 * frobenius_norm(A));
    const CMatrix VtV = adjoint(dec.vectors) * dec.vectors;
    CHECK(max_abs_diff(VtV, CMatrix::identity(8)) <= 1e-12);
  }
  CHECK_THROWS(extremal_eigs(CMatrix{}));
  CMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(jacobi_eigh(bad), std::invalid_argument);
}

TEST_CASE("spectral invariances") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> shift(-3, 3);
  std::uniform_real_distribution<double> scale(0.3, 3);
  for (int t = 0; t < 20; ++t) {
    const auto S = random_subset_of_window(rng, 4);
    std::vector<double> L;
    for (int k = -6; k <= 6; ++k) L.push_back(k + 0.1 * std::sin(k * 1.3 + t));
    const auto G = gram_matrix(L, S);
    const auto ev = jacobi_eigh(G.entries).values;

    const double b = shift(rng);
    std::vector<double> Lb;
    for (double x : L) Lb.push_back(x + b);
    const auto ev_b = jacobi_eigh(gram_matrix(Lb, S).entries).values;
    const double a = shift(rng);
    const auto ev_a = jacobi_eigh(gram_matrix(L, affine(S, 1.0, a)).entries).values;
    for (std::size_t k = 0; k < ev.size(); ++k) {
      CHECK(std::fabs(ev[k] - ev_b[k]) <= 1e-10);
      CHECK(std::fabs(ev[k] - ev_a[k]) <= 1e-10);
    }

    const double sigma = scale(rng);
    std::vector<double> Ls;
    for (double x : L) Ls.push_back(sigma * x);
    const auto Gs = gram_matrix(Ls, affine(S, 1.0 / sigma, 0.0));
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j = 0; j < L.size(); ++j) CHECK(std::abs(Gs.entries(i, j) - G.entries(i, j) / sigma) <= 1e-12);
  }
}

TEST_CASE("integer frequencies on subsets of the window") {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 20; ++t) {
    const auto S = random_subset_of_window(rng, 6);
    std::vector<double> L;
    for (int k = -10; k <= 10; k += 1 + t % 3) L.push_back(k);
    const auto e = extremal_eigs(gram_matrix(L, S));
    CHECK(e.lambda_min >= -1e-10);
    CHECK(e.lambda_max <= 1 + 1e-10);
  }
}

TEST_CASE("Riesz trajectory") {
  std::vector<FrequencySet> family;
  for (int K : {2, 4, 8, 16}) family.push_back(from_integers(integer_window(K)));
  for (double v : riesz_lower_trajectory(family, IntervalSet::single(-0.5, 0.5))) CHECK(v == doctest::Approx(1.0));

  const auto S = build_S(1.0, 0.5, 4);
  const auto traj = riesz_lower_trajectory(family, S);
  for (std::size_t i = 1; i < traj.size(); ++i) CHECK(traj[i] <= traj[i - 1] + 1e-12);
}
