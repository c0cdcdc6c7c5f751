#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperee {

/// Malformed hypergraph text. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computation refused because it would exceed a configured work budget.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial root iteration failed to reach the requested residual.
class RootFindingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hyperee
