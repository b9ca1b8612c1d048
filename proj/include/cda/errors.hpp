#pragma once

#include <stdexcept>
#include <string>

namespace cda {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual or JSON input (bad rational literal, bad expression,
// schema violation, ...).
struct ParseError : Error {
  using Error::Error;
};

// A value violates a structural precondition or invariant: unknown
// generator, mixed presentations, non-homogeneous relation, non-monotone
// filtration, violated hypothesis of a verification routine, ...
struct ValidationError : Error {
  using Error::Error;
};

// A configurable resource limit was hit (word-length cutoff, enumeration
// cap). Deliberately distinct from ValidationError so callers can tell
// "your input is wrong" from "raise the guard if you really mean it".
struct GuardError : Error {
  using Error::Error;
};

// Knuth-Bendix completion could not finish within its round budget, or the
// input forces a rule the monomial format cannot express.
struct CompletionError : Error {
  using Error::Error;
};

}  // namespace cda
