#pragma once

#include <stdexcept>
#include <string>

namespace hocent {

inline constexpr const char* kVersion = "0.1.0";

/// Error raised for invalid input data, unsatisfied preconditions and I/O
/// failures. The what() string is intended to be shown to the user as-is.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hocent
