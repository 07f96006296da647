#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace insitu {

/// Bad dimensions, non-finite input, or otherwise malformed arguments.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation called in the wrong order (e.g. a push after finalize).
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Arithmetic produced a non-finite value.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace insitu
