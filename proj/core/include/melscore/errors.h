/**
 * @file errors.h
 * Exception types thrown by the melscore library.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace melscore {

/// Raised when a domain value violates an invariant (non-positive frequency,
/// too-short piece, malformed search configuration, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& message)
      : std::runtime_error(message) {}
};

/// Raised when an input document cannot be parsed. The message carries the
/// offending position (line/field for delimited input, JSON path otherwise).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace melscore
