#pragma once

#include <stdexcept>
#include <string>

namespace sdyred {

// Shape or dimension disagreement between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An input violates an operation's documented precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Non-convergence, NaN, stability violation, norm collapse.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable, truncated or inconsistent files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sdyred
