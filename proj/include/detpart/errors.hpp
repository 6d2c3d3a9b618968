#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detpart {

/// Input text that does not follow the expected file format.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally invalid in-memory input (e.g. a pin referencing a missing node).
class MalformedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameters that violate their documented ranges.
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace detpart
