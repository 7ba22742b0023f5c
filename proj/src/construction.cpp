#include "rieszkit/construction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rieszkit/gram.hpp"

namespace rieszkit {

namespace {

constexpr int kMaxImprovedDepth = 12;

void check_alpha(double alpha) {
  if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in (0, 1]");
}

void check_unit_open(double v, const char* name) {
  if (!(v > 0 && v < 1)) throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
}

void check_alpha(const Rational& alpha) {
  if (!(alpha > 0 && alpha <= 1)) throw std::invalid_argument("alpha must lie in (0, 1]");
}

void check_unit_open(const Rational& v, const char* name) {
  if (!(v > 0 && v < 1)) throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
}

template <class T>
void append_periodized(std::vector<BasicInterval<T>>& out, const T& period, const T& halfwidth,
                       const BasicInterval<T>& window) {
  if (!(period > 0)) throw std::invalid_argument("periodized_support: period must be positive");
  if (halfwidth < 0) throw std::invalid_argument("periodized_support: halfwidth must be >= 0");
  if (!(halfwidth * 2 < period)) {
    throw std::invalid_argument("periodized_support: halfwidth must be below period / 2");
  }
  const std::int64_t m_lo = ceil_index(T((window.lo - halfwidth) / period));
  const std::int64_t m_hi = floor_index(T((window.hi + halfwidth) / period));
  for (std::int64_t m = m_lo; m <= m_hi; ++m) {
    const T center = T(m) * period;
    T a = center - halfwidth;
    T b = center + halfwidth;
    if (a < window.lo) a = window.lo;
    if (b > window.hi) b = window.hi;
    if (a <= b) out.push_back({a, b});
  }
}

template <class T>
BasicIntervalSet<T> build_V_impl(const T& alpha, const T& epsilon, int ell_max,
                                 const BasicInterval<T>& window) {
  if (ell_max < 0) throw std::invalid_argument("build_V: depth must be >= 0");
  std::vector<BasicInterval<T>> parts;
  for (int ell = 1; ell <= ell_max; ++ell) {
    const T period = T(1) / (T(ell) * alpha);
    T halfwidth = epsilon / T(ell);
    for (int i = 0; i < ell + 3; ++i) halfwidth /= 2;
    append_periodized(parts, period, halfwidth, window);
  }
  return normalize(std::move(parts));
}

template <class T>
BasicIntervalSet<T> build_V_improved_impl(const T& alpha, const T& epsilon, int ell_max,
                                          const std::vector<std::vector<long long>>& c_vectors,
                                          const BasicInterval<T>& window) {
  if (ell_max < 0 || ell_max > kMaxImprovedDepth) {
    throw std::invalid_argument("build_V_improved: depth must lie in 0..12");
  }
  if (c_vectors.size() < static_cast<std::size_t>(ell_max)) {
    throw std::invalid_argument("build_V_improved: missing c vector");
  }
  std::vector<BasicInterval<T>> parts;
  for (int ell = 1; ell <= ell_max; ++ell) {
    const auto& cv = c_vectors[static_cast<std::size_t>(ell - 1)];
    if (cv.size() != (std::size_t{1} << ell)) {
      throw std::invalid_argument("build_V_improved: c vector for level " + std::to_string(ell) +
                                  " must have 2^ell entries");
    }
    for (long long c : cv) {
      if (c < 1) throw std::invalid_argument("build_V_improved: c entries must be positive");
      const T period = T(1) / (T(c) * alpha);
      T halfwidth = epsilon / (T(c) * T(2));
      for (int i = 0; i < ell + 1; ++i) halfwidth /= 4;
      append_periodized(parts, period, halfwidth, window);
    }
  }
  return normalize(std::move(parts));
}

}  // namespace

ExactInterval exact_unit_window() { return {Rational(-1, 2), Rational(1, 2)}; }

IntervalSet periodized_support(double period, double halfwidth, const Interval& window) {
  std::vector<Interval> parts;
  append_periodized(parts, period, halfwidth, window);
  return normalize(std::move(parts));
}

ExactIntervalSet periodized_support(const Rational& period, const Rational& halfwidth,
                                    const ExactInterval& window) {
  std::vector<ExactInterval> parts;
  append_periodized(parts, period, halfwidth, window);
  return normalize(std::move(parts));
}

IntervalSet build_V_layer(double alpha, double eta, int ell) {
  check_alpha(alpha);
  check_unit_open(eta, "eta");
  if (ell < 1) throw std::invalid_argument("build_V_layer: ell must be >= 1");
  const double halfwidth = eta / (4.0 * ell * std::ldexp(1.0, ell));
  return periodized_support(1.0 / (ell * alpha), halfwidth, kUnitWindow);
}

ExactIntervalSet build_V_layer(const Rational& alpha, const Rational& eta, int ell) {
  check_alpha(alpha);
  check_unit_open(eta, "eta");
  if (ell < 1) throw std::invalid_argument("build_V_layer: ell must be >= 1");
  const Rational halfwidth = eta / (Rational(4 * ell) * pow2_rational(ell));
  return periodized_support(Rational(1) / (Rational(ell) * alpha), halfwidth, exact_unit_window());
}

IntervalSet build_V(double alpha, double epsilon, int ell_max) {
  check_alpha(alpha);
  check_unit_open(epsilon, "epsilon");
  return build_V_impl(alpha, epsilon, ell_max, kUnitWindow);
}

ExactIntervalSet build_V(const Rational& alpha, const Rational& epsilon, int ell_max) {
  check_alpha(alpha);
  check_unit_open(epsilon, "epsilon");
  return build_V_impl(alpha, epsilon, ell_max, exact_unit_window());
}

IntervalSet build_S(double alpha, double epsilon, int ell_max) {
  return complement_in(build_V(alpha, epsilon, ell_max), kUnitWindow);
}

ExactIntervalSet build_S(const Rational& alpha, const Rational& epsilon, int ell_max) {
  return complement_in(build_V(alpha, epsilon, ell_max), exact_unit_window());
}

IntervalSet build_V_eta(double alpha, double eta, int ell_max) {
  check_alpha(alpha);
  check_unit_open(eta, "eta");
  if (ell_max < 0) throw std::invalid_argument("build_V_eta: depth must be >= 0");
  IntervalSet out;
  for (int ell = 1; ell <= ell_max; ++ell) out = unite(out, build_V_layer(alpha, eta, ell));
  return out;
}

IntervalSet build_V_improved(double alpha, double epsilon, int ell_max,
                             const std::vector<std::vector<long long>>& c_vectors) {
  check_alpha(alpha);
  check_unit_open(epsilon, "epsilon");
  return build_V_improved_impl(alpha, epsilon, ell_max, c_vectors, kUnitWindow);
}

ExactIntervalSet build_V_improved(const Rational& alpha, const Rational& epsilon, int ell_max,
                                  const std::vector<std::vector<long long>>& c_vectors) {
  check_alpha(alpha);
  check_unit_open(epsilon, "epsilon");
  return build_V_improved_impl(alpha, epsilon, ell_max, c_vectors, exact_unit_window());
}

std::vector<std::vector<long long>> default_c_vectors(int ell_max) {
  std::vector<std::vector<long long>> out;
  for (int ell = 1; ell <= ell_max; ++ell) {
    std::vector<long long> cv(std::size_t{1} << ell);
    for (std::size_t r = 0; r < cv.size(); ++r) cv[r] = static_cast<long long>(r + 1);
    out.push_back(std::move(cv));
  }
  return out;
}

IntervalSet improved_family(double alpha, double eta, int ell, long long c) {
  check_alpha(alpha);
  check_unit_open(eta, "eta");
  if (ell < 1 || c < 1) throw std::invalid_argument("improved_family: ell and c must be >= 1");
  const double halfwidth = eta / (static_cast<double>(c) * std::pow(4.0, ell + 1));
  return periodized_support(1.0 / (static_cast<double>(c) * alpha), halfwidth, kUnitWindow);
}

cplx CoeffSequence::at(int j) const {
  if (j < -M || j > M) return 0;
  return coeffs[static_cast<std::size_t>(j + M)];
}

double CoeffSequence::energy(int upto) const {
  upto = std::min(upto, M);
  double s = 0;
  for (int j = -upto; j <= upto; ++j) s += std::norm(at(j));
  return s;
}

double CoeffSequence::l1_norm(int upto) const {
  upto = std::min(upto, M);
  double s = 0;
  for (int j = -upto; j <= upto; ++j) s += std::abs(at(j));
  return s;
}

CoeffSequence box_coeffs(double w, int M) {
  check_unit_open(w, "w");
  if (M < 0) throw std::invalid_argument("box_coeffs: M must be >= 0");
  CoeffSequence seq;
  seq.M = M;
  seq.width_w = w;
  seq.kind = "box";
  seq.coeffs.resize(static_cast<std::size_t>(2 * M + 1));
  const double amp = std::sqrt(2.0 / w);
  seq.coeffs[static_cast<std::size_t>(M)] = std::sqrt(w / 2.0);
  for (int j = 1; j <= M; ++j) {
    const double pj = std::numbers::pi * j;
    const double v = amp * std::sin(pj * w / 2.0) / pj;
    seq.coeffs[static_cast<std::size_t>(M + j)] = v;
    seq.coeffs[static_cast<std::size_t>(M - j)] = v;
  }
  return seq;
}

double bump_l1_total(double w) {
  check_unit_open(w, "w");
  return std::sqrt(3.0 / (2.0 * (w / 4.0)));
}

double bump_function(double w, double x) {
  const double h = w / 4.0;
  const double r = x - std::nearbyint(x);
  return bump_l1_total(w) * std::max(0.0, 1.0 - std::fabs(r) / h);
}

CoeffSequence bump_coeffs_l1(double w, int M) {
  check_unit_open(w, "w");
  if (M < 0) throw std::invalid_argument("bump_coeffs_l1: M must be >= 0");
  const double h = w / 4.0;
  const double A = bump_l1_total(w);
  CoeffSequence seq;
  seq.M = M;
  seq.width_w = w;
  seq.kind = "triangle";
  seq.coeffs.resize(static_cast<std::size_t>(2 * M + 1));
  seq.coeffs[static_cast<std::size_t>(M)] = A * h;
  for (int j = 1; j <= M; ++j) {
    const double u = std::numbers::pi * j * h;
    const double s = std::sin(u) / u;
    const double v = A * h * s * s;
    seq.coeffs[static_cast<std::size_t>(M + j)] = v;
    seq.coeffs[static_cast<std::size_t>(M - j)] = v;
  }
  return seq;
}

int truncation_index(const CoeffSequence& coeffs, double tail_target) {
  check_unit_open(tail_target, "tail_target");
  double partial = std::norm(coeffs.at(0));
  for (int m = 0; m <= coeffs.M; ++m) {
    if (m > 0) partial += 2 * std::norm(coeffs.at(m));
    if (1.0 - partial < tail_target) return m;
  }
  throw std::runtime_error("truncation_index: tail target not reached with M = " + std::to_string(coeffs.M));
}

int l1_truncation_index(const CoeffSequence& coeffs, double l1_total, double tail_target) {
  if (!(tail_target > 0)) throw std::invalid_argument("l1_truncation_index: tail_target must be positive");
  double partial = std::abs(coeffs.at(0));
  for (int m = 0; m <= coeffs.M; ++m) {
    if (m > 0) partial += 2 * std::abs(coeffs.at(m));
    if (l1_total - partial < tail_target) return m;
  }
  throw std::runtime_error("l1_truncation_index: tail target not reached with M = " + std::to_string(coeffs.M));
}

CoeffSequence box_coeffs_for_tail(double w, double tail_target) {
  for (int M = 64; M <= (1 << 22); M *= 2) {
    CoeffSequence c = box_coeffs(w, M);
    double partial = c.energy(M);
    if (1.0 - partial < tail_target) return c;
  }
  throw std::runtime_error("box_coeffs_for_tail: support limit exceeded");
}

double choose_delta(const CoeffSequence& coeffs, int M, double target) {
  if (!(target > 0)) throw std::invalid_argument("choose_delta: target must be positive");
  const double l1 = coeffs.l1_norm(M);
  const double bound = target / (2.0 * l1);
  for (int t = 1; t <= 60; ++t) {
    const double delta = std::ldexp(1.0, -t);
    if (std::sin(std::numbers::pi * delta / 2.0) < bound) return delta;
  }
  throw std::runtime_error("choose_delta: no dyadic delta >= 2^-60 satisfies the bound");
}

cplx TrigPolynomial::operator()(double x) const {
  cplx s = 0;
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    s += coeffs[k] * std::polar(1.0, 2.0 * std::numbers::pi * freqs[k] * x);
  }
  return s;
}

double TrigPolynomial::coeff_energy() const {
  double s = 0;
  for (const auto& c : coeffs) s += std::norm(c);
  return s;
}

TrigPolynomial witness_poly(const CoeffSequence& coeffs, int M_tilde, const std::vector<double>& freqs) {
  if (M_tilde < 0 || M_tilde > coeffs.M) throw std::invalid_argument("witness_poly: M~ outside stored support");
  if (freqs.size() != static_cast<std::size_t>(2 * M_tilde + 1)) {
    throw std::invalid_argument("witness_poly: need 2M~+1 frequencies");
  }
  for (std::size_t k = 1; k < freqs.size(); ++k) {
    if (!(freqs[k] > freqs[k - 1])) throw std::invalid_argument("witness_poly: frequencies must increase");
  }
  TrigPolynomial p;
  p.freqs = freqs;
  for (int j = -M_tilde; j <= M_tilde; ++j) p.coeffs.push_back(coeffs.at(j));
  return p;
}

double energy_on(const TrigPolynomial& poly, const IntervalSet& S) {
  if (poly.freqs.empty() || S.empty()) return 0.0;
  return quadratic_energy(gram_matrix(poly.freqs, S), poly.coeffs);
}

WitnessReport verify_witness(const TrigPolynomial& poly, const IntervalSet& S, int R, double eta,
                             int P_or_ell, double coeff_energy) {
  WitnessReport rep;
  rep.R = R;
  rep.eta = eta;
  rep.ell = P_or_ell;
  rep.P = P_or_ell;
  rep.M_tilde = static_cast<int>(poly.freqs.size() / 2);
  rep.coeff_energy = coeff_energy;
  rep.energy_on_S = energy_on(poly, S);
  rep.bound = R * eta / std::ldexp(1.0, P_or_ell) * coeff_energy;
  rep.satisfied = rep.energy_on_S <= rep.bound + 1e-12;
  return rep;
}

ExactApWitness exact_ap_witness(double alpha, double eta, int P, int R, double d, const IntervalSet& S) {
  check_alpha(alpha);
  check_unit_open(eta, "eta");
  if (P < 1) throw std::invalid_argument("exact_ap_witness: P must be >= 1");
  if (R < 2) throw std::invalid_argument("exact_ap_witness: R must be >= 2");
  const double w = eta * alpha / std::ldexp(1.0, P);
  const double tail_target = eta / std::ldexp(1.0, P);

  ExactApWitness out;
  out.coeffs = box_coeffs_for_tail(w, tail_target);
  const int Mt = truncation_index(out.coeffs, tail_target);
  std::vector<double> freqs;
  for (int j = -Mt; j <= Mt; ++j) freqs.push_back(P * alpha * j + d);
  out.poly = witness_poly(out.coeffs, Mt, freqs);
  out.truncated_energy = out.coeffs.energy(Mt);
  out.tail = 1.0 - out.truncated_energy;
  out.S = S;
  out.report = verify_witness(out.poly, S, R, eta, P, out.truncated_energy);
  out.report.alpha = alpha;
  out.report.tail = out.tail;
  out.energy_off_layer = energy_on(out.poly, complement_in(build_V_layer(alpha, eta, P), kUnitWindow));
  return out;
}

}  // namespace rieszkit
