#include "rieszkit/interval_set.hpp"

namespace rieszkit {

IntervalSet to_double_set(const ExactIntervalSet& s) {
  std::vector<Interval> parts;
  parts.reserve(s.size());
  for (const auto& iv : s.parts()) parts.push_back({to_double(iv.lo), to_double(iv.hi)});
  return IntervalSet::normalized(std::move(parts));
}

}  // namespace rieszkit
