#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvf {

// Malformed text input. line() is 1-based; 0 when the error is not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A structurally valid request that violates an invariant of the instance
// (empty-intersection rules for updates, failure bound, vertex ranges).
class InvalidRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace pvf
