#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphprod {

/// Malformed textual input (graph files, labels, words).
///
/// Line and column are 1-based. A line of 0 means the input had no line
/// structure (e.g. a word given on the command line).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

  /// Same error shifted to an enclosing position (used when a label or
  /// word is parsed out of a larger document).
  ParseError relocated(std::size_t line, std::size_t column_offset) const;

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace graphprod
