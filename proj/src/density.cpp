#include "rieszkit/density.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rieszkit/kernels.hpp"

namespace rieszkit {

DensityEstimate density_bounds(const FrequencySet& L, const Interval& window,
                               const std::vector<double>& r_grid) {
  if (r_grid.empty()) throw std::invalid_argument("density_bounds: empty r grid");
  const double len = window.hi - window.lo;
  for (double r : r_grid) {
    if (!(r > 0) || r > len) throw std::invalid_argument("density_bounds: r must lie in (0, window length]");
  }
  const double step = L.size() >= 2 ? separation(L) / 2 : len / 1024;

  DensityEstimate est;
  est.d_minus = -std::numeric_limits<double>::infinity();
  est.d_plus = std::numeric_limits<double>::infinity();
  for (double r : r_grid) {
    const CountExtremes ex = omp::window_count_extremes(L.points, window.lo, window.hi, r, step);
    DensityRow row{r, static_cast<double>(ex.min_count) / r, static_cast<double>(ex.max_count) / r};
    est.d_minus = std::max(est.d_minus, row.inf_rate);
    est.d_plus = std::min(est.d_plus, row.sup_rate);
    est.rows.push_back(row);
  }
  return est;
}

std::vector<double> geometric_r_grid(double r_min, double r_max) {
  if (!(r_min > 0) || r_max < r_min) throw std::invalid_argument("geometric_r_grid: need 0 < r_min <= r_max");
  std::vector<double> grid;
  for (double r = r_min; r <= r_max * (1 + 1e-12); r *= 2) grid.push_back(r);
  return grid;
}

}  // namespace rieszkit
