#include "graphprod/error.hpp"

namespace graphprod {

namespace {

std::string format_location(const std::string& message, std::size_t line,
                            std::size_t column) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ", ";
  out += "column " + std::to_string(column) + ": " + message;
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(format_location(message, line, column)),
      detail_(message),
      line_(line),
      column_(column) {}

ParseError ParseError::relocated(std::size_t line,
                                 std::size_t column_offset) const {
  return ParseError(detail_, line, column_ + column_offset);
}

}  // namespace graphprod
