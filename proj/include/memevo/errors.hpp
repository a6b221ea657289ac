#ifndef MEMEVO_ERRORS_HPP_
#define MEMEVO_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace memevo {

// Bad arguments to a public operation (shape mismatch, non-finite data,
// out-of-range parameter).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// Solver iterates left the finite range.
class NumericalBreakdown : public std::runtime_error {
 public:
  explicit NumericalBreakdown(const std::string& what) : std::runtime_error(what) {}
};

// Malformed on-disk input; carries the 1-based offending line when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line = 0)
      : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

// Inconsistent or incomplete run configuration.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace memevo

#endif  // MEMEVO_ERRORS_HPP_
