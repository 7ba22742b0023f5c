#include "rieszkit/frequency_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rieszkit {

FrequencySet make_frequency_set(std::vector<double> points, std::string meta) {
  for (double x : points) {
    if (!std::isfinite(x)) throw std::invalid_argument("frequency set: non-finite point");
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("frequency set: duplicate point");
  }
  return FrequencySet{std::move(points), std::move(meta)};
}

FrequencySet from_integers(const IntegerSet& values, std::string meta) {
  std::vector<double> pts(values.begin(), values.end());
  return make_frequency_set(std::move(pts), std::move(meta));
}

IntegerSet to_integers(const FrequencySet& L) {
  IntegerSet out;
  out.reserve(L.size());
  for (double x : L.points) {
    if (std::floor(x) != x) throw std::invalid_argument("expected integer frequencies");
    if (std::fabs(x) > static_cast<double>(kIntegerLimit)) {
      throw std::invalid_argument("integer frequency exceeds 2^40");
    }
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

IntegerSet make_integer_set(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

double separation(const FrequencySet& L) {
  if (L.size() < 2) throw std::invalid_argument("separation: need at least two points");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < L.size(); ++i) best = std::min(best, L.points[i] - L.points[i - 1]);
  return best;
}

IntegerSet integer_window(std::int64_t K) {
  if (K < 0) throw std::invalid_argument("integer_window: K must be >= 0");
  IntegerSet out;
  out.reserve(static_cast<std::size_t>(2 * K + 1));
  for (std::int64_t k = -K; k <= K; ++k) out.push_back(k);
  return out;
}

FrequencySet restrict_to(const FrequencySet& L, double lo, double hi) {
  auto first = std::lower_bound(L.points.begin(), L.points.end(), lo);
  auto last = std::upper_bound(L.points.begin(), L.points.end(), hi);
  return FrequencySet{std::vector<double>(first, last), L.meta};
}

FrequencySet translate(const FrequencySet& L, double shift) {
  FrequencySet out = L;
  for (double& x : out.points) x += shift;
  return out;
}

FrequencySet dilate(const FrequencySet& L, double scale) {
  if (scale == 0) throw std::invalid_argument("dilate: scale must be nonzero");
  std::vector<double> pts = L.points;
  for (double& x : pts) x *= scale;
  return make_frequency_set(std::move(pts), L.meta);
}

}  // namespace rieszkit
