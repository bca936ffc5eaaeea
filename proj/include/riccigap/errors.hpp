#pragma once

#include <stdexcept>
#include <string>

namespace riccigap {

/// A precondition on user-supplied data was violated. CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// The two distributions live in different components: the graph metric
/// between their supports is infinite and no finite-cost plan exists.
class MetricInfiniteError : public InputError {
 public:
  explicit MetricInfiniteError(const std::string& what) : InputError(what) {}
};

/// The request is well-formed but exceeds a size/resource guard. Exit code 3.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed; indicates a bug. Exit code 4.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace riccigap
