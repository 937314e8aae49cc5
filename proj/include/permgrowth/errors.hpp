#pragma once

#include <stdexcept>
#include <string>

namespace permgrowth {

// Thrown when a computation would exceed a configured resource bound
// (brute-force size limits, superset-enumeration caps, search iteration
// caps).  Maps to exit code 2 on the CLI; plain std::invalid_argument
// (exit code 1) is used for malformed input.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace permgrowth
