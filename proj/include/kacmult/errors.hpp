#pragma once

#include <stdexcept>
#include <string>

namespace kacmult {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two weights (or a weight and an algebra) have incompatible (m, n).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed weight text or wrong arity.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An input violates a documented precondition (non-dominant weight, lo not
/// below hi, non-convex window, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A configurable size guard was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A computed object contradicts the conjectured multiplicity structure
/// (undefined dot-dominant map, non-dominant or colliding lambda_theta,
/// negative simple-character multiplicity, ...). Counterexamples are results,
/// so callers are expected to catch this one specifically.
class ConjectureFalsified : public Error {
 public:
  ConjectureFalsified(std::string what, std::string payload)
      : Error(std::move(what)), payload_(std::move(payload)) {}

  /// Human-readable description of the offending data (weights, theta, ...).
  const std::string& payload() const noexcept { return payload_; }

 private:
  std::string payload_;
};

}  // namespace kacmult
