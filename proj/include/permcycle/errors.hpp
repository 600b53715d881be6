#pragma once

#include <stdexcept>
#include <string>

namespace permcycle {

/// Raised when a value sequence is not a rearrangement of 1..n.
struct InvalidPermutation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised by from_cycles when the cycles overlap or miss an element.
struct MalformedDecomposition : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A caller-side precondition that the operation cannot recover from,
/// e.g. asking for the S'' condition on a size-1 permutation.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input lies outside the domain of a bijection (wrong class, n < 4, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Exact-integer coefficient overflow. Never wraps silently.
struct OverflowError : std::overflow_error {
  using std::overflow_error::overflow_error;
};

/// Size cap exceeded (oracle enumeration or series expansion).
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Name that does not denote one of the built-in generating functions.
struct UnknownGeneratingFunction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace permcycle
