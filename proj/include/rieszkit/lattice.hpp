#pragma once

#include <cstdint>
#include <map>

#include "rieszkit/frequency_set.hpp"

namespace rieszkit {

/// Integer k per point with k / N the nearest lattice point; ties go down.
IntegerSet lattice_indices(const FrequencySet& L, std::int64_t N);

/// Rounds each point to (1/N)Z. Requires 1/N < separation(L).
FrequencySet round_to_lattice(const FrequencySet& L, std::int64_t N);

/// Least non-negative residue.
inline std::int64_t mod_floor(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

struct ResidueReport {
  std::int64_t modulus = 1;
  std::map<std::int64_t, IntegerSet> classes;
  std::int64_t densest = 0;  // residue with the most elements (smallest on ties)
};

ResidueReport residue_classes(const IntegerSet& O, std::int64_t N);
ResidueReport residue_classes(const FrequencySet& O, std::int64_t N);

}  // namespace rieszkit
