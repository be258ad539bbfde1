#pragma once

#include <stdexcept>
#include <string>

namespace fcl {

// Raised by the formula, index-term, and proof-script parsers.  `position`
// is a 0-based character offset into the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error("at column " + std::to_string(position + 1) + ": " + message),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace fcl
