#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latspec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed source text. `line` is 1-based; 0 means "not tied to a line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A structure failed one of its defining conditions.
///
/// `check` names the violated condition (for example "L3" or "T0") and
/// `witness` holds the lexicographically smallest offending tuple of indices.
class ValidationError : public Error {
 public:
  ValidationError(std::string check, std::vector<std::size_t> witness,
                  const std::string& message)
      : Error(message), check_(std::move(check)), witness_(std::move(witness)) {}

  const std::string& check() const noexcept { return check_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::string check_;
  std::vector<std::size_t> witness_;
};

}  // namespace latspec
