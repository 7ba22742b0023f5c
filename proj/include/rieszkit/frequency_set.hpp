#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rieszkit {

/// Finite, strictly increasing set of real frequencies.
struct FrequencySet {
  std::vector<double> points;
  std::string meta;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Integer-valued frequency sets (sorted, strictly increasing).
using IntegerSet = std::vector<std::int64_t>;

/// Sorts `points` and rejects duplicates and non-finite values.
FrequencySet make_frequency_set(std::vector<double> points, std::string meta = {});

FrequencySet from_integers(const IntegerSet& values, std::string meta = {});

/// Throws std::invalid_argument if any point is not an integer.
IntegerSet to_integers(const FrequencySet& L);

/// Sorts and deduplicates.
IntegerSet make_integer_set(std::vector<std::int64_t> values);

/// Minimum consecutive gap. Requires at least two points.
double separation(const FrequencySet& L);

/// Integers in [-K, K].
IntegerSet integer_window(std::int64_t K);

/// Points of L inside [lo, hi].
FrequencySet restrict_to(const FrequencySet& L, double lo, double hi);

/// {x + shift}, {scale * x}.
FrequencySet translate(const FrequencySet& L, double shift);
FrequencySet dilate(const FrequencySet& L, double scale);

/// Largest absolute value representable by the integer tools.
inline constexpr std::int64_t kIntegerLimit = std::int64_t{1} << 40;

}  // namespace rieszkit
