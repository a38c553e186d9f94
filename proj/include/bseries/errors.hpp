#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bseries {

// Malformed bracket text; carries the byte offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error("at byte " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Malformed JSON document (series or vector-field file).
class FormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Precondition violation, e.g. composing with a series outside class B.
class DomainError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A coefficient beyond the truncation order of a series was requested.
class TruncationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Vector dimension or argument-count mismatch.
class DimensionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bseries
