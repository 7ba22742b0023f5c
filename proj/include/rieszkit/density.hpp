#pragma once

#include <vector>

#include "rieszkit/frequency_set.hpp"
#include "rieszkit/interval_set.hpp"

namespace rieszkit {

struct DensityRow {
  double r = 0;
  double inf_rate = 0;  // min over positions of count / r
  double sup_rate = 0;  // max over positions of count / r
};

struct DensityEstimate {
  double d_minus = 0;
  double d_plus = 0;
  std::vector<DensityRow> rows;
};

/// Finite-window estimates of the lower and upper Beurling densities.
///
/// For each r, windows [x, x + r] with x stepped at half the separation
/// across `window` are counted. D^- is estimated by the largest per-r
/// infimum and D^+ by the smallest per-r supremum.
DensityEstimate density_bounds(const FrequencySet& L, const Interval& window,
                               const std::vector<double>& r_grid);

/// r_min, 2 r_min, 4 r_min, ... up to r_max.
std::vector<double> geometric_r_grid(double r_min, double r_max);

}  // namespace rieszkit
