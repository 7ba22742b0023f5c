#include "rieszkit/progressions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "rieszkit/errors.hpp"
#include "rieszkit/lattice.hpp"

namespace rieszkit {

namespace {

std::vector<FixedDiffRun> runs_impl(const IntegerSet& O, std::int64_t P, std::size_t min_length) {
  std::unordered_set<std::int64_t> members(O.begin(), O.end());
  std::vector<FixedDiffRun> runs;
  for (std::int64_t v : O) {
    if (members.count(v - P)) continue;
    std::size_t len = 1;
    std::int64_t x = v + P;
    while (members.count(x)) {
      ++len;
      x += P;
    }
    if (len >= min_length) runs.push_back({len, v});
  }
  return runs;
}

}  // namespace

FixedDiffRun find_ap_fixed_diff(const IntegerSet& O, std::int64_t P) {
  if (P < 1) throw std::invalid_argument("find_ap_fixed_diff: P must be >= 1");
  FixedDiffRun best;
  for (const auto& run : runs_impl(O, P, 1)) {
    if (run.length > best.length || (run.length == best.length && run.start < best.start)) best = run;
  }
  return best;
}

std::vector<FixedDiffRun> maximal_runs(const IntegerSet& O, std::int64_t P, std::size_t min_length) {
  if (P < 1) throw std::invalid_argument("maximal_runs: P must be >= 1");
  return runs_impl(O, P, min_length);
}

std::vector<RealRun> maximal_runs_real(const FrequencySet& L, double D, double tol,
                                       std::size_t min_length) {
  if (!(D > 0)) throw std::invalid_argument("maximal_runs_real: D must be positive");
  const auto& pts = L.points;
  auto present = [&](double x) {
    auto it = std::lower_bound(pts.begin(), pts.end(), x - tol);
    return it != pts.end() && *it <= x + tol;
  };
  std::vector<RealRun> runs;
  for (double v : pts) {
    if (present(v - D)) continue;
    std::size_t len = 1;
    double x = v + D;
    while (present(x)) {
      ++len;
      x += D;
    }
    if (len >= min_length) runs.push_back({len, v});
  }
  return runs;
}

std::int64_t lattice_resolution(double bound) {
  if (!(bound > 0)) throw std::invalid_argument("lattice_resolution: bound must be positive");
  std::int64_t N = 1;
  while (!(1.0 / static_cast<double>(N) < bound)) {
    if (N >= kIntegerLimit) throw std::invalid_argument("lattice_resolution: bound too small");
    N *= 2;
  }
  return N;
}

ApResult extract_approx_ap(const FrequencySet& L, int M, double delta, std::int64_t Lmult) {
  if (!(delta > 0)) throw std::invalid_argument("extract_approx_ap: delta must be positive");
  if (M < 1) throw std::invalid_argument("extract_approx_ap: M must be >= 1");
  if (Lmult < 1) throw std::invalid_argument("extract_approx_ap: Lmult must be >= 1");
  const std::size_t need = static_cast<std::size_t>(2 * M + 1);
  if (L.size() < need) {
    throw NotFoundError("extract_approx_ap: set has fewer than 2M+1 points", L.size() > 0 ? 1 : 0);
  }

  const double sep = separation(L);
  const std::int64_t N = lattice_resolution(std::min(sep, 2 * delta));
  const IntegerSet k = lattice_indices(L, N);
  const std::int64_t modulus = Lmult * N;
  const ResidueReport rep = residue_classes(k, modulus);

  std::vector<const IntegerSet*> classes;
  for (const auto& [u, members] : rep.classes) classes.push_back(&members);
  std::stable_sort(classes.begin(), classes.end(),
                   [](const IntegerSet* a, const IntegerSet* b) { return a->size() > b->size(); });

  const std::int64_t span = k.back() - k.front();
  const std::int64_t t_max = std::max<std::int64_t>(1, span / (modulus * (need - 1)));
  std::size_t best = 1;

  for (std::int64_t t = 1; t <= t_max; ++t) {
    const std::int64_t step = modulus * t;
    for (const IntegerSet* cls : classes) {
      if (cls->size() <= best && cls->size() < need) break;
      const FixedDiffRun run = find_ap_fixed_diff(*cls, step);
      best = std::max(best, run.length);
      if (run.length < need) continue;

      ApResult res;
      res.N = N;
      res.M = M;
      res.c = Lmult * t;
      const std::int64_t center = run.start + static_cast<std::int64_t>(M) * step;
      res.d = static_cast<double>(center) / static_cast<double>(N);
      res.s.reserve(need);
      for (int j = -M; j <= M; ++j) {
        const std::int64_t target = center + j * step;
        const auto it = std::lower_bound(k.begin(), k.end(), target);
        const double orig = L.points[static_cast<std::size_t>(it - k.begin())];
        res.s.push_back(orig);
        const double dev = std::fabs(orig - static_cast<double>(res.c) * j - res.d);
        res.max_deviation = std::max(res.max_deviation, dev);
      }
      return res;
    }
  }
  throw NotFoundError("extract_approx_ap: no progression of length " + std::to_string(need) +
                          " (best " + std::to_string(best) + ")",
                      best);
}

}  // namespace rieszkit
