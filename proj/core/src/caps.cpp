#include "klspecht/caps.hpp"

#include <cstdlib>
#include <string>

namespace klspecht {

namespace {

std::size_t env_or(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t consumed = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &consumed);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(name) + " is not a positive integer");
  }
  if (consumed != std::string(raw).size() || value == 0)
    throw std::invalid_argument(std::string(name) + " is not a positive integer");
  return static_cast<std::size_t>(value);
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  caps.max_group_order = env_or("CAP_GROUP_ORDER", caps.max_group_order);
  caps.max_cosets = env_or("CAP_COSETS", caps.max_cosets);
  return caps;
}

}  // namespace klspecht
