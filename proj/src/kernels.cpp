#include "rieszkit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "rieszkit/gram.hpp"

namespace rieszkit {

namespace {

void check_gram_shape(const std::vector<double>& freqs, CMatrix& G) {
  if (G.rows() != freqs.size() || G.cols() != freqs.size()) G = CMatrix(freqs.size(), freqs.size());
}

std::size_t position_count(double lo, double hi, double r, double step) {
  if (!(step > 0)) throw std::invalid_argument("window_count_extremes: step must be positive");
  if (!(r > 0) || r > hi - lo) throw std::invalid_argument("window_count_extremes: r out of range");
  return static_cast<std::size_t>(std::floor((hi - r - lo) / step)) + 1;
}

// Counts over positions [first, last) with a two-pointer sweep.
CountExtremes count_range(const std::vector<double>& pts, double lo, double r, double step,
                          std::size_t first, std::size_t last) {
  CountExtremes ex{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
  const double x0 = lo + step * static_cast<double>(first);
  auto a = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), x0) - pts.begin());
  auto b = static_cast<std::size_t>(std::upper_bound(pts.begin(), pts.end(), x0 + r) - pts.begin());
  for (std::size_t i = first; i < last; ++i) {
    const double x = lo + step * static_cast<double>(i);
    while (a < pts.size() && pts[a] < x) ++a;
    while (b < pts.size() && pts[b] <= x + r) ++b;
    const auto c = static_cast<std::int64_t>(b - a);
    ex.min_count = std::min(ex.min_count, c);
    ex.max_count = std::max(ex.max_count, c);
  }
  return ex;
}

void mark_segment(std::vector<std::uint8_t>& flags, std::int64_t from, std::int64_t to) {
  for (std::int64_t n = from; n <= to; ++n) flags[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t q = 2; q * q <= to; ++q) {
    const std::int64_t sq = q * q;
    std::int64_t m = ((from + sq - 1) / sq) * sq;
    for (; m <= to; m += sq) flags[static_cast<std::size_t>(m)] = 0;
  }
}

}  // namespace

namespace serial {

void gram_fill(const std::vector<double>& freqs, const IntervalSet& S, CMatrix& G) {
  check_gram_shape(freqs, G);
  const std::size_t n = freqs.size();
  for (std::size_t m = 0; m < n; ++m) {
    G(m, m) = exp_inner(0.0, S);
    for (std::size_t k = 0; k < m; ++k) {
      const cplx v = exp_inner(freqs[m] - freqs[k], S);
      G(m, k) = v;
      G(k, m) = std::conj(v);
    }
  }
}

double quadratic_form(const CMatrix& G, const std::vector<cplx>& c) {
  if (G.rows() != c.size() || G.cols() != c.size()) throw std::invalid_argument("quadratic_form: size mismatch");
  double total = 0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    cplx row = 0;
    for (std::size_t k = 0; k < c.size(); ++k) row += G(m, k) * c[k];
    total += std::real(std::conj(c[m]) * row);
  }
  return total;
}

std::vector<std::uint8_t> sample_indicator(const IntervalSet& S, double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_indicator: need at least two samples");
  std::vector<std::uint8_t> out(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) out[k] = S.contains(lo + h * static_cast<double>(k)) ? 1 : 0;
  return out;
}

CountExtremes window_count_extremes(const std::vector<double>& points, double lo, double hi,
                                    double r, double step) {
  const std::size_t n = position_count(lo, hi, r, step);
  return count_range(points, lo, r, step, 0, n);
}

std::vector<std::uint8_t> squarefree_sieve(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("squarefree_sieve: limit must be >= 1");
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(limit) + 1, 0);
  mark_segment(flags, 1, limit);
  return flags;
}

}  // namespace serial

namespace omp {

void gram_fill(const std::vector<double>& freqs, const IntervalSet& S, CMatrix& G) {
  check_gram_shape(freqs, G);
  const auto n = static_cast<std::int64_t>(freqs.size());
  const cplx diag = exp_inner(0.0, S);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t m = 0; m < n; ++m) {
    const auto mm = static_cast<std::size_t>(m);
    G(mm, mm) = diag;
    for (std::size_t k = 0; k < mm; ++k) {
      const cplx v = exp_inner(freqs[mm] - freqs[k], S);
      G(mm, k) = v;
      G(k, mm) = std::conj(v);
    }
  }
}

double quadratic_form(const CMatrix& G, const std::vector<cplx>& c) {
  if (G.rows() != c.size() || G.cols() != c.size()) throw std::invalid_argument("quadratic_form: size mismatch");
  const auto n = static_cast<std::int64_t>(c.size());
  double total = 0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t m = 0; m < n; ++m) {
    const auto mm = static_cast<std::size_t>(m);
    cplx row = 0;
    for (std::size_t k = 0; k < c.size(); ++k) row += G(mm, k) * c[k];
    total += std::real(std::conj(c[mm]) * row);
  }
  return total;
}

std::vector<std::uint8_t> sample_indicator(const IntervalSet& S, double lo, double hi, std::size_t n) {
  if (n < 2) throw std::invalid_argument("sample_indicator: need at least two samples");
  std::vector<std::uint8_t> out(n);
  const double h = (hi - lo) / static_cast<double>(n - 1);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(n); ++k) {
    out[static_cast<std::size_t>(k)] = S.contains(lo + h * static_cast<double>(k)) ? 1 : 0;
  }
  return out;
}

CountExtremes window_count_extremes(const std::vector<double>& points, double lo, double hi,
                                    double r, double step) {
  const std::size_t n = position_count(lo, hi, r, step);
  const auto chunks = static_cast<std::int64_t>(std::max(1, omp_get_max_threads()) * 4);
  std::vector<CountExtremes> partial(static_cast<std::size_t>(chunks),
                                     {std::numeric_limits<std::int64_t>::max(),
                                      std::numeric_limits<std::int64_t>::min()});
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t first = n * static_cast<std::size_t>(c) / static_cast<std::size_t>(chunks);
    const std::size_t last = n * static_cast<std::size_t>(c + 1) / static_cast<std::size_t>(chunks);
    if (first < last) partial[static_cast<std::size_t>(c)] = count_range(points, lo, r, step, first, last);
  }
  CountExtremes ex = partial.front();
  for (const auto& p : partial) {
    ex.min_count = std::min(ex.min_count, p.min_count);
    ex.max_count = std::max(ex.max_count, p.max_count);
  }
  return ex;
}

std::vector<std::uint8_t> squarefree_sieve(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("squarefree_sieve: limit must be >= 1");
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(limit) + 1, 0);
  const std::int64_t segment = 1 << 16;
  const std::int64_t segments = (limit + segment - 1) / segment;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t s = 0; s < segments; ++s) {
    const std::int64_t from = 1 + s * segment;
    const std::int64_t to = std::min(limit, from + segment - 1);
    mark_segment(flags, from, to);
  }
  return flags;
}

}  // namespace omp

}  // namespace rieszkit
