#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace centropy {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input outside the mathematical domain of an operation (negative support,
// probability outside (0,1), non-finite integrand value, ...).
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed textual input. `position` is a 1-based character offset for
// specification strings, or a 1-based line number for sample files.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// An iterative routine ran out of budget. `best_estimate` carries the value
// reached when the budget was exhausted.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double best_estimate)
      : Error(what), best_estimate(best_estimate) {}
  double best_estimate;
};

// The distribution does not support the requested operation
// (e.g. the density of an empirical sample).
struct CapabilityError : Error {
  explicit CapabilityError(const std::string& what) : Error(what) {}
};

}  // namespace centropy
