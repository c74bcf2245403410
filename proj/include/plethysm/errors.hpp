#pragma once

#include <stdexcept>
#include <string>

namespace plethysm {

// Caller passed arguments that violate an operation's precondition.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured size cap (degree, enumeration, basis size) would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computations of the same quantity disagreed.
class CrossCheckError : public std::runtime_error {
 public:
  explicit CrossCheckError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace plethysm
