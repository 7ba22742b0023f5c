// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles/inertia_bisection.hpp"
#include "oracles/naive_ap.hpp"
#include "oracles/quadrature.hpp"
#include "rieszkit/construction.hpp"
#include "rieszkit/density.hpp"
#include "rieszkit/duality.hpp"
#include "rieszkit/errors.hpp"
#include "rieszkit/example_sets.hpp"
#include "rieszkit/gram.hpp"
#include "rieszkit/interval_io.hpp"
#include "rieszkit/kernels.hpp"
#include "rieszkit/progressions.hpp"
#include "rieszkit/squarefree.hpp"

using namespace rieszkit;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Measures of V and S at depth 10, plus per-layer bump geometry and CSV samples.
void criterion_set_measure(Outcome& o) {
  const Rational eps_q[] = {Rational(1, 10), Rational(1, 2), Rational(9, 10)};
  const double eps_d[] = {0.1, 0.5, 0.9};
  for (int i = 0; i < 3; ++i) {
    const auto t0 = Clock::now();
    const auto V = build_V(Rational(1), eps_q[i], 10);
    const auto S = build_S(Rational(1), eps_q[i], 10);
    const double dt = seconds_since(t0);
    const double mv = to_double(measure(V)), ms = to_double(measure(S));
    o.require(measure(V) < eps_q[i], fmt("|V| < eps for eps = %g", eps_d[i]));
    o.require(measure(S) > 1 - eps_q[i], fmt("|S| > 1 - eps for eps = %g", eps_d[i]));
    o.require(measure(V) + measure(S) == Rational(1), "|V| + |S| = 1");
    o.require(std::fabs(mv - measure(build_V(1.0, eps_d[i], 10))) <= 1e-12, "double path agrees with exact path");
    o.require(dt < 1.0, fmt("exact build under 1 s for eps = %g", eps_d[i]));
    o.note(fmt("eps=%g", eps_d[i]) + fmt(" |V|=%.10f", mv) + fmt(" |S|=%.10f", ms) + fmt(" (%.3f s)", dt));

    // Layer ell has bumps centred at m / ell, |m / ell| <= 1/2, half-width eps / (ell 2^(ell+3)).
    for (int ell = 1; ell <= 10; ++ell) {
      const Rational hw = eps_q[i] / (Rational(ell) * pow2_rational(ell + 3));
      const auto layer = build_V_layer(Rational(1), eps_q[i] / 2, ell);
      std::size_t centres = 0;
      for (int m = -ell; m <= ell; ++m)
        if (2 * std::abs(m) <= ell) ++centres;
      std::size_t clipped = 0;
      bool widths_ok = true;
      for (const auto& iv : layer.parts()) {
        const bool edge = iv.lo == Rational(-1, 2) || iv.hi == Rational(1, 2);
        if (edge && ell % 2 == 0) ++clipped;
        widths_ok = widths_ok && (edge ? iv.length() == hw : iv.length() == 2 * hw);
      }
      // For even ell the bumps at +-1/2 are split by the window into two half bumps.
      o.require(layer.size() == centres && widths_ok && (ell % 2 == 1 || clipped == 2),
                "layer " + std::to_string(ell) + " bump count and widths");
    }

    // Characteristic-function samples on 4097 points.
    const auto Vd = to_double_set(V);
    std::ostringstream csv;
    write_indicator_csv(csv, Vd, kUnitWindow, 4097);
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    std::size_t rows = 0, ones = 0, agree = 0;
    while (std::getline(in, line)) {
      const auto comma = line.find(',');
      const double x = std::stod(line.substr(0, comma));
      const int chi = std::stoi(line.substr(comma + 1));
      ++rows;
      ones += chi;
      agree += (chi == 1) == Vd.contains(x);
    }
    const double frac = static_cast<double>(ones) / rows;
    o.require(rows == 4097 && agree == rows, "CSV samples match membership");
    o.require(std::fabs(frac - mv) <= 2.0 * Vd.size() / 4096 + 1.0 / 4096, "CSV occupancy matches |V|");
  }
}

// 2. The exact-progression witness chain at alpha = 1, R = 3, eta = 1/4.
void criterion_witness_chain(Outcome& o) {
  const auto t0 = Clock::now();
  const int R = 3;
  const double eta = 0.25;
  const auto S = build_S(1.0, 2 * eta, 10);
  for (int ell = 1; ell <= 3; ++ell) {
    const auto w = exact_ap_witness(1.0, eta, ell, R, 0.0, S);
    const double scale = eta / std::ldexp(1.0, ell);
    const std::string tag = "ell=" + std::to_string(ell);
    o.require(w.report.energy_on_S <= R * scale * w.truncated_energy + 1e-10, tag + " energy bound");
    o.require(w.truncated_energy > 1.0 / R, tag + " truncated energy > 1/R");
    o.require(w.tail < scale, tag + " tail < eta/2^ell");
    o.require(w.report.energy_on_S <= w.energy_off_layer + 1e-10, tag + " S avoids the layer");
    o.require(w.energy_off_layer <= w.tail + 1e-10, tag + " off-layer energy <= tail");
    o.require(w.report.satisfied, tag + " satisfied");
    o.note(tag + " M~=" + std::to_string(w.report.M_tilde) + fmt(" energy_on_S=%.6e", w.report.energy_on_S) +
           fmt(" bound=%.6e", R * scale * w.truncated_energy) + fmt(" tail=%.6e", w.tail));
  }
  const double dt = seconds_since(t0);
  o.require(dt < 5.0, "runtime < 5 s");
}

// 3. lambda_min of Gram(Z cap [-64, 64], S) against the witness Rayleigh bound.
void criterion_riesz_decay(Outcome& o) {
  const auto t0 = Clock::now();
  const int K = 64;
  std::vector<double> Z;
  for (int k = -K; k <= K; ++k) Z.push_back(k);
  double prev = INFINITY;
  for (int depth : {2, 4, 6, 8}) {
    const auto S = build_S(1.0, 0.5, depth);
    const auto G = gram_matrix(Z, S);
    const auto e = extremal_eigs(G);

    // Box coefficients for layer P (w = eta / 2^P, eta = 1/4) placed at frequencies P j, |P j| <= K.
    double rayleigh = INFINITY;
    for (int P = 1; P <= depth; ++P) {
      const int Mt = K / P;
      const auto coeffs = box_coeffs(0.25 / std::ldexp(1.0, P), Mt);
      std::vector<cplx> c(Z.size());
      for (int j = -Mt; j <= Mt; ++j) c[P * j + K] = coeffs.at(j);
      rayleigh = std::min(rayleigh, quadratic_energy(G, c) / coeffs.energy(Mt));
    }
    const std::string tag = "depth=" + std::to_string(depth);
    o.require(e.lambda_min <= rayleigh, tag + " lambda_min <= Rayleigh bound");
    o.require(e.lambda_min < prev, tag + " lambda_min decreases");
    o.require(e.residual_min <= 1e-9 && e.residual_max <= 1e-9, tag + " eigen residual <= 1e-9");
    o.note(tag + fmt(" lambda_min=%.6e", e.lambda_min) + fmt(" rayleigh=%.6e", rayleigh) +
           fmt(" residual=%.1e", std::max(e.residual_min, e.residual_max)));
    prev = e.lambda_min;
  }
  const double dt = seconds_since(t0);
  o.require(dt < 30.0, "runtime < 30 s");
  o.note(fmt("runtime %.2f s", dt));
}

// 4. Approximate-progression extraction on example (a) and on a jittered lattice.
void criterion_extraction(Outcome& o) {
  const auto t0 = Clock::now();
  // M = 5 needs 11 consecutive terms; with M_n = n that is block 11, ending at 2 * 3 * 66 = 396.
  const auto L = from_integers(example_a({3, {}, 396}));
  for (int M = 1; M <= 5; ++M) {
    try {
      const auto ap = extract_approx_ap(L, M, 0.25, 1);
      o.require(ap.c == 3 && ap.max_deviation == 0.0, "example (a) M=" + std::to_string(M) + " gives c=3, deviation 0");
    } catch (const NotFoundError& e) {
      o.require(false, "example (a) M=" + std::to_string(M) + " not found");
    }
  }

  // Six blocks ([-126, 126]) hold difference-3 runs of length at most 6, so only M <= 2 can give c = 3.
  const auto L6 = from_integers(example_a({3, {}, 2 * 3 * 21}));
  o.require(find_ap_fixed_diff(to_integers(L6), 3).length == 6, "six blocks: longest difference-3 run is 6");
  std::string six = "six-block window:";
  for (int M = 1; M <= 5; ++M) {
    try {
      const auto ap = extract_approx_ap(L6, M, 0.25, 1);
      if (M <= 2) o.require(ap.c == 3 && ap.max_deviation == 0.0, "six blocks M=" + std::to_string(M));
      six += " M=" + std::to_string(M) + " c=" + std::to_string(ap.c);
    } catch (const NotFoundError& e) {
      o.require(M > 2, "six blocks M=" + std::to_string(M) + " found");
      six += " M=" + std::to_string(M) + " NotFound(best " + std::to_string(e.best_length()) + ")";
    }
  }
  o.note(six);

  std::mt19937_64 rng(314159);
  for (double delta : {0.2, 0.05}) {
    for (std::int64_t Lmult : {1, 2, 5}) {
      std::uniform_real_distribution<double> jit(-delta / 2, delta / 2);
      std::vector<double> pts;
      for (int k = -100; k <= 100; ++k) pts.push_back(k + jit(rng));
      const auto J = make_frequency_set(pts);
      const std::set<double> members(pts.begin(), pts.end());
      const auto ap = extract_approx_ap(J, 3, delta, Lmult);
      bool ok = ap.c > 0 && ap.c % Lmult == 0 && ap.max_deviation <= delta && ap.s.size() == 7;
      for (int j = -3; j <= 3 && ok; ++j) {
        const double sj = ap.s[j + 3];
        ok = members.count(sj) && std::fabs(sj - ap.c * j - ap.d) <= delta && (j == -3 || sj > ap.s[j + 2]);
      }
      o.require(ok, fmt("jittered lattice delta=%g", delta) + " Lmult=" + std::to_string(Lmult));
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 5.0, "runtime < 5 s");
}

// 5. Duality on random projections.
void criterion_duality(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(12345);
  double worst_frame = 0, worst_riesz = 0;
  int boundary = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 1 + rng() % 11;
    const auto P = random_projection(12, k, rng);
    const auto J = random_subset(12, rng);
    const auto r = duality_check(P, J);
    worst_frame = std::max(worst_frame, std::fabs(r.frame_lower - (1 - r.bessel_opt)));
    worst_riesz = std::max(worst_riesz, std::fabs(r.riesz_lower - (1 - r.bessel_opt)));
    boundary += r.boundary;
  }
  o.require(worst_frame <= 1e-9, "frame_lower = 1 - bessel_opt");
  o.require(worst_riesz <= 1e-9, "riesz_lower = 1 - bessel_opt");
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "runtime < 10 s");
  o.note(fmt("max gaps %.2e", worst_frame) + fmt(" / %.2e", worst_riesz) + ", boundary trials " +
         std::to_string(boundary));
}

// 6. Square-free progressions and density.
void criterion_squarefree(Outcome& o) {
  const auto t0 = Clock::now();
  const std::int64_t limit = 1000000;
  const auto sf = squarefree_set(limit);
  std::string runs = "longest runs:";
  for (std::int64_t P = 1; P <= 10; ++P) {
    const auto r = squarefree_obstruction(P, sf, limit);
    o.require(r.observed < r.Q * r.Q, "P=" + std::to_string(P) + " observed < Q^2");
    runs += " " + std::to_string(r.observed);
    if (P == 1) o.require(r.observed == 3, "P=1 longest run is 3");
  }
  o.note(runs);

  const auto sym = from_integers(squarefree_symmetric(limit));
  const auto d = density_bounds(sym, {-0.9 * limit, 0.9 * limit}, geometric_r_grid(4096, 65536));
  const double target = 6 / (std::numbers::pi * std::numbers::pi);
  o.require(std::fabs(d.d_minus - target) <= 0.02, "D- within 0.02 of 6/pi^2");
  o.require(std::fabs(d.d_plus - target) <= 0.02, "D+ within 0.02 of 6/pi^2");
  o.note(fmt("D- %.5f", d.d_minus) + fmt(" D+ %.5f", d.d_plus) + fmt(" target %.5f", target));
  const double dt = seconds_since(t0);
  o.require(dt < 10.0, "runtime < 10 s");
  o.note(fmt("runtime %.2f s", dt));
}

// 7. Example densities and the example (b) progression census.
void criterion_examples(Outcome& o) {
  for (std::int64_t P : {2, 3}) {
    const double half = 5000.0 * P;
    const auto A = from_integers(example_a({P, {}, static_cast<std::int64_t>(2 * half)}));
    const auto d = density_bounds(A, {-half, half}, geometric_r_grid(8, 128));
    const std::string tag = "P=" + std::to_string(P);
    o.require(std::fabs(d.d_minus - 0.5 / P) <= 0.05, tag + fmt(" D- estimate %.4f", d.d_minus) +
                                                          fmt(" vs 1/(2P) = %.4f", 0.5 / P));
    o.require(std::fabs(d.d_plus - 1.0 / P) <= 0.05, tag + fmt(" D+ estimate %.4f", d.d_plus) +
                                                         fmt(" vs 1/P = %.4f", 1.0 / P));
    const auto big = density_bounds(A, {-half, half}, {half / 4});
    o.note(tag + fmt(" r<=128: D- %.4f", d.d_minus) + fmt(" D+ %.4f", d.d_plus) +
           fmt("; r=%g:", half / 4) + fmt(" inf %.4f", big.rows[0].inf_rate) + fmt(" sup %.4f", big.rows[0].sup_rate));
  }

  const auto B = example_b({1, 4, 0});
  const auto pos = restrict_to(B, 0, INFINITY);
  std::string census = "example (b) census:";
  for (int k = 1; k <= 4; ++k) {
    const double D = std::pow(100.0, k);
    const auto runs = maximal_runs_real(pos, D, 1e-7, 2);
    // k = 1 is the single point sigma_1 + N: no run of two or more terms.
    const bool ok = k == 1 ? runs.empty() : runs.size() == 1 && runs[0].length == static_cast<std::size_t>(k);
    o.require(ok, "exactly one progression with difference 100^" + std::to_string(k));
    census += " k=" + std::to_string(k) + ":" + std::to_string(k == 1 ? 1 : runs.empty() ? 0 : runs[0].length);
  }
  o.note(census);
}

// 8. Gram invariances on 200 random instances.
void criterion_invariance(Outcome& o) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8080);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_real_distribution<double> shift(-5, 5);
  std::uniform_real_distribution<double> scale(0.25, 4);
  double worst_t = 0, worst_d = 0, lo = INFINITY, hi = -INFINITY;
  for (int t = 0; t < 200; ++t) {
    std::vector<Interval> parts;
    for (int i = 0; i < 1 + t % 5; ++i) {
      const double a = u(rng);
      parts.push_back({a, std::min(0.5, a + 0.3 * (u(rng) + 0.5))});
    }
    const auto S = normalize(std::move(parts));
    const int n = 4 + t % 9;
    std::vector<double> L, Lz;
    for (int k = 0; k < n; ++k) {
      L.push_back(k * 1.1 + 0.3 * u(rng));
      Lz.push_back(k * (1 + t % 3) - n);
    }
    const auto ev = jacobi_eigh(gram_matrix(L, S).entries).values;
    const double b = shift(rng), a = shift(rng);
    std::vector<double> Lb(L);
    for (auto& x : Lb) x += b;
    const auto evb = jacobi_eigh(gram_matrix(Lb, S).entries).values;
    const auto eva = jacobi_eigh(gram_matrix(L, affine(S, 1.0, a)).entries).values;
    for (std::size_t k = 0; k < ev.size(); ++k) {
      worst_t = std::max({worst_t, std::fabs(ev[k] - evb[k]), std::fabs(ev[k] - eva[k])});
    }
    const double sigma = scale(rng);
    std::vector<double> Ls(L);
    for (auto& x : Ls) x *= sigma;
    const auto G = gram_matrix(L, S).entries;
    const auto Gs = gram_matrix(Ls, affine(S, 1.0 / sigma, 0.0)).entries;
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j = 0; j < L.size(); ++j) worst_d = std::max(worst_d, std::abs(Gs(i, j) - G(i, j) / sigma));
    const auto ez = extremal_eigs(gram_matrix(Lz, S));
    lo = std::min(lo, ez.lambda_min);
    hi = std::max(hi, ez.lambda_max);
  }
  o.require(worst_t <= 1e-10, "translation invariance of the spectrum");
  o.require(worst_d <= 1e-12, "dilation law entrywise");
  o.require(lo >= -1e-10 && hi <= 1 + 1e-10, "integer-frequency spectrum in [0, 1]");
  const double dt = seconds_since(t0);
  o.require(dt < 30.0, "runtime < 30 s");
  o.note(fmt("translation %.1e", worst_t) + fmt(" dilation %.1e", worst_d) + fmt(" spectrum [%.3e,", lo) +
         fmt(" %.12f]", hi));
}

// 9. Library routines against independent oracles.
void criterion_oracles(Outcome& o) {
  std::mt19937_64 rng(99991);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  std::uniform_real_distribution<double> th(-60, 60);
  double worst_q = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Interval> parts;
    for (int i = 0; i < 1 + t % 6; ++i) {
      const double a = u(rng);
      parts.push_back({a, a + 0.1 * (u(rng) + 0.5)});
    }
    const auto S = normalize(std::move(parts));
    const double theta = th(rng);
    worst_q = std::max(worst_q, std::abs(exp_inner(theta, S) - oracle::exp_integral(theta, S)));
  }
  o.require(worst_q <= 1e-10, "exp_inner vs quadrature");

  std::normal_distribution<double> g;
  double worst_e = 0;
  for (int t = 0; t < 50; ++t) {
    CMatrix A(8, 8);
    oracle::cmat B(8, std::vector<cplx>(8));
    for (std::size_t i = 0; i < 8; ++i) {
      A(i, i) = g(rng);
      for (std::size_t j = 0; j < i; ++j) {
        A(i, j) = cplx(g(rng), g(rng));
        A(j, i) = std::conj(A(i, j));
      }
    }
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) B[i][j] = A(i, j);
    const auto e = extremal_eigs(A);
    worst_e = std::max({worst_e, std::fabs(e.lambda_min - oracle::eigenvalue(B, 0)),
                        std::fabs(e.lambda_max - oracle::eigenvalue(B, 7))});
  }
  o.require(worst_e <= 1e-8, "extremal_eigs vs inertia bisection");

  int mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<std::int64_t> v;
    const std::size_t n = 1 + rng() % 500;
    for (std::size_t i = 0; i < n; ++i) v.push_back(static_cast<std::int64_t>(rng() % 1000) - 500);
    const auto O = make_integer_set(v);
    const std::int64_t P = 1 + static_cast<std::int64_t>(rng() % 9);
    const auto a = find_ap_fixed_diff(O, P);
    const auto b = oracle::longest_run(O, P);
    mismatches += a.length != b.length || a.start != b.start;
  }
  o.require(mismatches == 0, "find_ap_fixed_diff vs naive double loop");
  o.note(fmt("quadrature %.1e", worst_q) + fmt(" eigen %.1e", worst_e) + " ap mismatches " + std::to_string(mismatches));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"set measure", criterion_set_measure},
      {"witness chain", criterion_witness_chain},
      {"Riesz-bound decay", criterion_riesz_decay},
      {"approximate AP extraction", criterion_extraction},
      {"frame/Riesz duality", criterion_duality},
      {"square-free obstruction", criterion_squarefree},
      {"example densities and census", criterion_examples},
      {"Gram invariances", criterion_invariance},
      {"oracle equivalences", criterion_oracles},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double dt = seconds_since(t0);
    std::printf("%s %zu %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), dt);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
