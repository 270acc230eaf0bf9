#include "pvf/errors.hpp"

namespace pvf {

namespace {
std::string with_line(std::size_t line, const std::string& message) {
  if (line == 0) return message;
  return "line " + std::to_string(line) + ": " + message;
}
}  // namespace

FormatError::FormatError(std::size_t line, const std::string& message)
    : std::runtime_error(with_line(line, message)), line_(line) {}

}  // namespace pvf
