#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "rieszkit/frequency_set.hpp"

namespace rieszkit {

struct ExampleAParams {
  std::int64_t P = 2;
  std::vector<std::int64_t> M;  // block lengths; empty means M_n = n
  std::int64_t K = 100;         // truncation to [-K, K]
};

struct ExampleBParams {
  std::int64_t N = 1;
  int k_max = 4;
  double K = 0;  // 0 means no truncation beyond k_max
};

/// Example (a): +- union of blocks {d_k + j P : j = 1..M_k}, d_1 = 0,
/// d_{k+1} = d_k + 2 M_k P.
IntegerSet example_a(const ExampleAParams& p);

/// Offsets d_k of the blocks intersecting [0, K].
std::vector<std::int64_t> example_a_offsets(const ExampleAParams& p);

/// Example (b): +- union of sigma_k + N k + {0, 100^k, ..., (k-1) 100^k},
/// sigma_k = frac(k sqrt 2).
FrequencySet example_b(const ExampleBParams& p);

double example_b_sigma(int k);

}  // namespace rieszkit
