#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rieszkit {

/// Thrown when a finite search (AP extraction, fixed-difference run) cannot
/// reach the requested length. best_length is the longest run seen.
class NotFoundError : public std::runtime_error {
 public:
  NotFoundError(const std::string& what, std::size_t best_length)
      : std::runtime_error(what), best_length_(best_length) {}

  std::size_t best_length() const { return best_length_; }

 private:
  std::size_t best_length_;
};

}  // namespace rieszkit
