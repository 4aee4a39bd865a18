#include "orient/core.hpp"

#include <algorithm>
#include <limits>

namespace orient {

std::string to_string(Wide value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Wide parse_wide(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  constexpr Wide kMax = ~Wide{0};
  Wide value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("not a nonnegative integer: " + text);
    const auto digit = static_cast<unsigned>(ch - '0');
    if (value > (kMax - digit) / 10) throw std::invalid_argument("integer too large: " + text);
    value = value * 10 + digit;
  }
  return value;
}

ParseError::ParseError(Kind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

}  // namespace orient
