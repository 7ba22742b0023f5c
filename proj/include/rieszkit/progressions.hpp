#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rieszkit/frequency_set.hpp"

namespace rieszkit {

struct FixedDiffRun {
  std::size_t length = 0;
  std::int64_t start = 0;
};

/// Longest run start, start + P, ..., start + (length - 1) P inside O.
/// Ties are broken by the smallest start.
FixedDiffRun find_ap_fixed_diff(const IntegerSet& O, std::int64_t P);

/// All maximal runs with difference P of length >= min_length.
std::vector<FixedDiffRun> maximal_runs(const IntegerSet& O, std::int64_t P, std::size_t min_length);

struct RealRun {
  std::size_t length = 0;
  double start = 0;
};

/// Maximal runs with difference D, membership tested within tol.
std::vector<RealRun> maximal_runs_real(const FrequencySet& L, double D, double tol,
                                       std::size_t min_length);

struct ApResult {
  std::int64_t c = 0;       // common difference, a multiple of Lmult
  double d = 0;             // offset: s[j] is close to c * j + d, j = -M..M
  std::vector<double> s;    // 2M + 1 original members of L
  double max_deviation = 0;
  std::int64_t N = 0;       // lattice resolution used for rounding
  int M = 0;
};

/// Approximate arithmetic progression of length 2M + 1 with
/// |s[j] - c j - d| <= delta and c a multiple of Lmult.
/// Throws NotFoundError (carrying the best length) when none exists in L.
ApResult extract_approx_ap(const FrequencySet& L, int M, double delta, std::int64_t Lmult);

/// Smallest power of two N with 1/N < bound.
std::int64_t lattice_resolution(double bound);

}  // namespace rieszkit
