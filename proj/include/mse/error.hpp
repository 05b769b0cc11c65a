#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mse {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when unknown.
class parse_error : public error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called outside its contract (wrong class, no-report, ...).
class precondition_error : public error {
 public:
  using error::error;
};

/// A size guard refused the input (exhaustive search too large, expansion too big).
class limit_error : public error {
 public:
  using error::error;
};

}  // namespace mse
