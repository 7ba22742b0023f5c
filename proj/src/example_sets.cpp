#include "rieszkit/example_sets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rieszkit {

namespace {

std::int64_t block_length(const ExampleAParams& p, std::size_t k) {
  if (p.M.empty()) return static_cast<std::int64_t>(k + 1);
  return p.M[k];
}

void validate(const ExampleAParams& p) {
  if (p.P < 1) throw std::invalid_argument("example_a: P must be >= 1");
  if (p.K < 0 || p.K > kIntegerLimit) throw std::invalid_argument("example_a: K out of range");
  for (std::size_t k = 0; k < p.M.size(); ++k) {
    if (p.M[k] < 1) throw std::invalid_argument("example_a: block lengths must be positive");
    if (k > 0 && p.M[k] <= p.M[k - 1]) throw std::invalid_argument("example_a: block lengths must increase");
  }
}

}  // namespace

std::vector<std::int64_t> example_a_offsets(const ExampleAParams& p) {
  validate(p);
  std::vector<std::int64_t> d;
  std::int64_t dk = 0;
  for (std::size_t k = 0; p.M.empty() || k < p.M.size(); ++k) {
    if (dk + p.P > p.K) break;
    d.push_back(dk);
    dk += 2 * block_length(p, k) * p.P;
  }
  return d;
}

IntegerSet example_a(const ExampleAParams& p) {
  const auto offsets = example_a_offsets(p);
  IntegerSet pos;
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    const std::int64_t Mk = block_length(p, k);
    for (std::int64_t j = 1; j <= Mk; ++j) {
      const std::int64_t v = offsets[k] + j * p.P;
      if (v > p.K) break;
      pos.push_back(v);
    }
  }
  std::vector<std::int64_t> all;
  all.reserve(2 * pos.size());
  for (std::int64_t v : pos) {
    all.push_back(v);
    all.push_back(-v);
  }
  return make_integer_set(std::move(all));
}

double example_b_sigma(int k) {
  const double v = k * std::sqrt(2.0);
  return v - std::floor(v);
}

FrequencySet example_b(const ExampleBParams& p) {
  if (p.N < 1) throw std::invalid_argument("example_b: N must be >= 1");
  if (p.k_max < 1 || p.k_max > 7) throw std::invalid_argument("example_b: k_max must be in 1..7");
  if (p.K < 0) throw std::invalid_argument("example_b: K must be >= 0");
  std::vector<double> pts;
  double step = 1;
  for (int k = 1; k <= p.k_max; ++k) {
    step *= 100;
    const double base = example_b_sigma(k) + static_cast<double>(p.N) * k;
    for (int i = 0; i < k; ++i) {
      const double v = base + i * step;
      if (p.K > 0 && v > p.K) break;
      pts.push_back(v);
      pts.push_back(-v);
    }
  }
  return make_frequency_set(std::move(pts), "example_b");
}

}  // namespace rieszkit
