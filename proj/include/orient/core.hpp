#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orient {

/// Vertex weight of a contracted tree. Always positive.
using Weight = std::int64_t;

/// Accumulator for weighted reachability. Products of two weights near 2^31
/// summed over many pairs overflow 64 bits.
using Wide = unsigned __int128;

std::string to_string(Wide value);

/// Parses a decimal string into a Wide. Throws std::invalid_argument.
Wide parse_wide(const std::string& text);

/// Raised when input text does not follow one of the line formats.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Malformed, OutOfRange, DuplicateEdge, SelfLoop, CountMismatch };

  ParseError(Kind kind, int line, const std::string& what);

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }

 private:
  Kind kind_;
  int line_;
};

/// Raised when a size guard of an exhaustive routine is exceeded.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the exact partition DP when the weight total exceeds its budget.
class BudgetExceededError : public SizeLimitError {
 public:
  using SizeLimitError::SizeLimitError;
};

}  // namespace orient
