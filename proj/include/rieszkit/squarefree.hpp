#pragma once

#include <cstdint>
#include <vector>

#include "rieszkit/frequency_set.hpp"

namespace rieszkit {

/// Square-free integers in [1, limit].
IntegerSet squarefree_set(std::int64_t limit);

/// The square-free set together with its negatives.
IntegerSet squarefree_symmetric(std::int64_t limit);

std::int64_t next_prime_after(std::int64_t P);

struct ObstructionReport {
  std::int64_t P = 0;
  std::int64_t Q = 0;        // smallest prime > P
  std::int64_t cap = 0;      // Q^2 - 1
  std::int64_t observed = 0; // longest AP with difference P among square-free integers <= limit
  std::int64_t start = 0;
  std::int64_t limit = 0;
  bool within_cap = false;
};

ObstructionReport squarefree_obstruction(std::int64_t P, std::int64_t limit);
ObstructionReport squarefree_obstruction(std::int64_t P, const IntegerSet& squarefree, std::int64_t limit);

}  // namespace rieszkit
