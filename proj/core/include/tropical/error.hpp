#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropical {

// Raised when an operation is applied outside its domain: the zero
// polynomial where a nonzero one is required, evaluation at infinity,
// a degree outside [r, n], the inverse of infinity.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed textual input. position() is a 0-based byte offset into the
// text that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string reason, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + reason),
        reason_(std::move(reason)),
        position_(position) {}

  const std::string& reason() const noexcept { return reason_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string reason_;
  std::size_t position_;
};

}  // namespace tropical
