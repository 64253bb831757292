#pragma once

#include <stdexcept>
#include <string>

namespace perron {

/// Malformed polynomial or vector text.
class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Input that parses but violates a precondition (not monic, not squarefree, ...).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A configured precision, state or memory cap was hit before an answer was certified.
class ResourceExhausted : public std::runtime_error {
 public:
  explicit ResourceExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A fixed-width coordinate computation would overflow.
class CoordinateOverflow : public std::overflow_error {
 public:
  CoordinateOverflow() : std::overflow_error("coordinate overflow in 64-bit fast path") {}
};

}  // namespace perron
