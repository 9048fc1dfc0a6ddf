#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epistoch {

// Numerical failure (solver or quadrature did not converge). CLI exit code 3.
class NumericalError : public std::runtime_error {
  public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file. Carries the 1-based line number. CLI exit code 2.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

}  // namespace epistoch
