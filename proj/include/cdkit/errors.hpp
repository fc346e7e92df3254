#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace cdkit {

// Base class for all library errors so callers can catch them in one go.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element or subgroup enumeration grew past its configured budget.
struct CapExceeded : Error {
  using Error::Error;
};

// Generators of different degrees were mixed.
struct DegreeMismatch : Error {
  using Error::Error;
};

// An ingested multiplication table violates a group axiom.
struct NotAGroup : Error {
  std::string axiom;            // "identity", "inverse", "closure", "associativity"
  std::array<int, 3> witness;   // offending indices, unused slots -1

  NotAGroup(std::string ax, std::array<int, 3> w, const std::string& msg)
      : Error(msg), axiom(std::move(ax)), witness(w) {}
};

// Constructor arguments violate the constructor's arithmetic constraints.
struct InvalidParameters : Error {
  using Error::Error;
};

// Subgroups of different parent groups were combined.
struct ParentMismatch : Error {
  using Error::Error;
};

// Sylow subgroup requested for a prime not dividing the group order.
struct NoSuchPrime : Error {
  using Error::Error;
};

// A group file or group-spec string failed to parse.
struct ParseError : Error {
  int line;  // 1-based line number, 0 when not applicable

  ParseError(const std::string& msg, int line_no = 0)
      : Error(msg), line(line_no) {}
};

}  // namespace cdkit
