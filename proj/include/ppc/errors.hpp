#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ppc {

/// The method gave up or the input admits no solution (CLI exit code 1).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File contents do not match the documented format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A register that cannot be replayed against its instance.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace ppc
