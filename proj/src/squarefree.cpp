#include "rieszkit/squarefree.hpp"

#include <algorithm>
#include <stdexcept>

#include "rieszkit/kernels.hpp"
#include "rieszkit/progressions.hpp"

namespace rieszkit {

IntegerSet squarefree_set(std::int64_t limit) {
  if (limit < 1) throw std::invalid_argument("squarefree_set: limit must be >= 1");
  if (limit > kIntegerLimit) throw std::invalid_argument("squarefree_set: limit exceeds 2^40");
  const auto flags = omp::squarefree_sieve(limit);
  IntegerSet out;
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (flags[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

IntegerSet squarefree_symmetric(std::int64_t limit) {
  const IntegerSet pos = squarefree_set(limit);
  IntegerSet out;
  out.reserve(2 * pos.size());
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) out.push_back(-*it);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

std::int64_t next_prime_after(std::int64_t P) {
  auto is_prime = [](std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  };
  std::int64_t q = std::max<std::int64_t>(P + 1, 2);
  while (!is_prime(q)) ++q;
  return q;
}

ObstructionReport squarefree_obstruction(std::int64_t P, const IntegerSet& squarefree, std::int64_t limit) {
  if (P < 1) throw std::invalid_argument("squarefree_obstruction: P must be >= 1");
  ObstructionReport rep;
  rep.P = P;
  rep.Q = next_prime_after(P);
  rep.cap = rep.Q * rep.Q - 1;
  rep.limit = limit;
  const FixedDiffRun run = find_ap_fixed_diff(squarefree, P);
  rep.observed = static_cast<std::int64_t>(run.length);
  rep.start = run.start;
  rep.within_cap = rep.observed <= rep.cap;
  return rep;
}

ObstructionReport squarefree_obstruction(std::int64_t P, std::int64_t limit) {
  if (limit < 4) throw std::invalid_argument("squarefree_obstruction: limit must be >= 4");
  return squarefree_obstruction(P, squarefree_set(limit), limit);
}

}  // namespace rieszkit
