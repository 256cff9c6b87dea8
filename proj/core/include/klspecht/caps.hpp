#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace klspecht {

/// Resource limits applied before any enumeration starts.
struct Caps {
  std::size_t max_group_order = 10'000;
  std::size_t max_cosets = 2'000;

  /// Defaults overridden by CAP_GROUP_ORDER / CAP_COSETS when set.
  static Caps from_env();
};

/// Thrown when a requested computation would exceed a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace klspecht
