#pragma once

// Hot loops with a serial reference and an OpenMP variant. The two variants
// must agree bit-for-bit on integer outputs and within rounding on sums.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rieszkit/cmatrix.hpp"
#include "rieszkit/interval_set.hpp"

namespace rieszkit {

struct CountExtremes {
  std::int64_t min_count = 0;
  std::int64_t max_count = 0;
};

namespace serial {

/// Fills the lower triangle via exp_inner and mirrors it.
void gram_fill(const std::vector<double>& freqs, const IntervalSet& S, CMatrix& G);

double quadratic_form(const CMatrix& G, const std::vector<cplx>& c);

/// chi_S at n uniform points lo + (hi - lo) k / (n - 1).
std::vector<std::uint8_t> sample_indicator(const IntervalSet& S, double lo, double hi, std::size_t n);

/// Extremes of |points cap [x, x + r]| for x = lo, lo + step, ..., x + r <= hi.
CountExtremes window_count_extremes(const std::vector<double>& points, double lo, double hi,
                                    double r, double step);

/// flags[n] = 1 iff n is square-free, n = 0..limit (flags[0] = 0).
std::vector<std::uint8_t> squarefree_sieve(std::int64_t limit);

}  // namespace serial

namespace omp {

void gram_fill(const std::vector<double>& freqs, const IntervalSet& S, CMatrix& G);
double quadratic_form(const CMatrix& G, const std::vector<cplx>& c);
std::vector<std::uint8_t> sample_indicator(const IntervalSet& S, double lo, double hi, std::size_t n);
CountExtremes window_count_extremes(const std::vector<double>& points, double lo, double hi,
                                    double r, double step);
std::vector<std::uint8_t> squarefree_sieve(std::int64_t limit);

}  // namespace omp

}  // namespace rieszkit
