#pragma once

#include <stdexcept>
#include <string>

namespace rrl {

// Caller violated a precondition (bad sizes, indices, malformed input).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// A value outside the domain where a formula is defined.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// An internal exact identity failed. Never recoverable.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rrl
