#pragma once

#include <stdexcept>
#include <string>

namespace rydberg {

/// Invalid object construction: bad level symbol, dimension mismatch,
/// duplicate coupling, malformed configuration.
class ConstructionError : public std::invalid_argument {
 public:
  explicit ConstructionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Non-finite input or output encountered during a numerical routine.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rydberg
