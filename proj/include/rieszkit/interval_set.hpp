#pragma once

// Finite unions of closed real intervals.
//
// BasicIntervalSet<T> is always normalized: parts are sorted by lower
// endpoint and consecutive parts are separated by more than merge_tol.
// The double instantiation is what the rest of the library works with; the
// Rational instantiation (merge_tol = 0) is the exact path used to validate
// the floating-point constructions.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "rieszkit/rational.hpp"

namespace rieszkit {

template <class T>
struct BasicInterval {
  T lo{};
  T hi{};

  T length() const { return hi - lo; }
  bool contains(const T& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

template <class T>
T default_merge_tol() {
  if constexpr (std::is_floating_point_v<T>) {
    return T(1e-12);
  } else {
    return T(0);
  }
}

namespace detail {

template <class T>
bool is_finite_value(const T& x) {
  if constexpr (std::is_floating_point_v<T>) {
    return std::isfinite(x);
  } else {
    return true;
  }
}

}  // namespace detail

template <class T>
class BasicIntervalSet {
 public:
  using value_type = T;
  using interval_type = BasicInterval<T>;

  BasicIntervalSet() : merge_tol_(default_merge_tol<T>()) {}

  /// Sorts and merges `parts`; intervals overlapping or closer than
  /// `merge_tol` are fused.
  static BasicIntervalSet normalized(std::vector<interval_type> parts,
                                     T merge_tol = default_merge_tol<T>()) {
    if (merge_tol < T(0)) throw std::invalid_argument("normalize: merge_tol must be >= 0");
    for (const auto& iv : parts) {
      if (!detail::is_finite_value(iv.lo) || !detail::is_finite_value(iv.hi)) {
        throw std::invalid_argument("normalize: non-finite endpoint");
      }
      if (iv.hi < iv.lo) throw std::invalid_argument("normalize: interval with lo > hi");
    }
    std::sort(parts.begin(), parts.end(),
              [](const interval_type& a, const interval_type& b) { return a.lo < b.lo; });
    std::vector<interval_type> merged;
    merged.reserve(parts.size());
    for (auto& iv : parts) {
      if (!merged.empty() && iv.lo <= merged.back().hi + merge_tol) {
        if (merged.back().hi < iv.hi) merged.back().hi = iv.hi;
      } else {
        merged.push_back(std::move(iv));
      }
    }
    BasicIntervalSet s;
    s.parts_ = std::move(merged);
    s.merge_tol_ = merge_tol;
    return s;
  }

  static BasicIntervalSet single(T lo, T hi, T merge_tol = default_merge_tol<T>()) {
    return normalized({interval_type{lo, hi}}, merge_tol);
  }

  const std::vector<interval_type>& parts() const { return parts_; }
  T merge_tol() const { return merge_tol_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }

  bool contains(const T& x) const {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const T& v, const interval_type& iv) { return v < iv.lo; });
    if (it == parts_.begin()) return false;
    return x <= std::prev(it)->hi;
  }

  friend bool operator==(const BasicIntervalSet& a, const BasicIntervalSet& b) {
    return a.parts_ == b.parts_;
  }

 private:
  std::vector<interval_type> parts_;
  T merge_tol_;
};

using Interval = BasicInterval<double>;
using IntervalSet = BasicIntervalSet<double>;
using ExactInterval = BasicInterval<Rational>;
using ExactIntervalSet = BasicIntervalSet<Rational>;

template <class T>
BasicIntervalSet<T> normalize(std::vector<BasicInterval<T>> intervals,
                              T merge_tol = default_merge_tol<T>()) {
  return BasicIntervalSet<T>::normalized(std::move(intervals), merge_tol);
}

template <class T>
T measure(const BasicIntervalSet<T>& s) {
  T total(0);
  for (const auto& iv : s.parts()) total += iv.length();
  return total;
}

/// Closure of window \ s.
template <class T>
BasicIntervalSet<T> complement_in(const BasicIntervalSet<T>& s, const BasicInterval<T>& window) {
  std::vector<BasicInterval<T>> out;
  T cursor = window.lo;
  for (const auto& iv : s.parts()) {
    if (iv.hi < window.lo) continue;
    if (iv.lo > window.hi) break;
    if (iv.lo > cursor) out.push_back({cursor, iv.lo});
    if (iv.hi > cursor) cursor = iv.hi;
  }
  if (cursor < window.hi) out.push_back({cursor, window.hi});
  return BasicIntervalSet<T>::normalized(std::move(out), s.merge_tol());
}

/// Image {scale * x + shift : x in s}.
template <class T>
BasicIntervalSet<T> affine(const BasicIntervalSet<T>& s, const T& scale, const T& shift) {
  if (scale == T(0)) throw std::invalid_argument("affine: scale must be nonzero");
  std::vector<BasicInterval<T>> out;
  out.reserve(s.size());
  for (const auto& iv : s.parts()) {
    T a = scale * iv.lo + shift;
    T b = scale * iv.hi + shift;
    if (b < a) std::swap(a, b);
    out.push_back({a, b});
  }
  return BasicIntervalSet<T>::normalized(std::move(out), s.merge_tol());
}

template <class T>
BasicIntervalSet<T> intersect(const BasicIntervalSet<T>& s, const BasicIntervalSet<T>& t) {
  std::vector<BasicInterval<T>> out;
  const auto& a = s.parts();
  const auto& b = t.parts();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const T lo = a[i].lo < b[j].lo ? b[j].lo : a[i].lo;
    const T hi = a[i].hi < b[j].hi ? a[i].hi : b[j].hi;
    if (!(hi < lo)) out.push_back({lo, hi});
    if (a[i].hi < b[j].hi) {
      ++i;
    } else {
      ++j;
    }
  }
  const T tol = s.merge_tol() < t.merge_tol() ? t.merge_tol() : s.merge_tol();
  return BasicIntervalSet<T>::normalized(std::move(out), tol);
}

template <class T>
BasicIntervalSet<T> unite(const BasicIntervalSet<T>& s, const BasicIntervalSet<T>& t) {
  std::vector<BasicInterval<T>> all(s.parts());
  all.insert(all.end(), t.parts().begin(), t.parts().end());
  const T tol = s.merge_tol() < t.merge_tol() ? t.merge_tol() : s.merge_tol();
  return BasicIntervalSet<T>::normalized(std::move(all), tol);
}

template <class T>
BasicIntervalSet<T> intersect_window(const BasicIntervalSet<T>& s, const BasicInterval<T>& window) {
  return intersect(s, BasicIntervalSet<T>::normalized({window}, s.merge_tol()));
}

/// Converts an exact set to doubles (re-normalized at the default tolerance).
IntervalSet to_double_set(const ExactIntervalSet& s);

}  // namespace rieszkit
