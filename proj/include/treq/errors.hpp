#pragma once

#include <stdexcept>
#include <string>

namespace treq {

// Raised for malformed textual input (word syntax, rationals, JSON payloads).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an operation's precondition is violated (trivial word where a
// nontrivial one is required, rank mismatch, bad permutation, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Axis classification was asked to work inside a ball too small to contain
// the interaction region of the two axes.
struct RadiusError : DomainError {
  using DomainError::DomainError;
};

// A product-length prediction was requested for an unbounded axis overlap;
// the caller has to dispatch on the direction bit instead.
struct UnboundedConfigError : DomainError {
  using DomainError::DomainError;
};

// Randomized matrix sampling failed to produce a normalizable matrix within
// the retry budget.
struct SamplingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace treq
