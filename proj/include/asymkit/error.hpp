#pragma once

#include <stdexcept>
#include <string>

namespace asymkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension mismatch, ragged matrices, bad indices.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// Text that does not parse as a rational or as a document of the expected schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input parses but violates an axiom (triangle inequality, separation, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Exact enumeration requested above the configured dimension cap.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Polyhedron or LP with empty feasible set where one was required.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Caller asked for a non-Baire certificate on a space that has none.
class NoCertificate : public Error {
 public:
  using Error::Error;
};

}  // namespace asymkit
