#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dq {

/// Malformed arguments: dimension or truncation mismatch, index out of range,
/// wrong multivector degree, unparsable expression.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A computation would exceed a configured hard cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& message, std::string cost_estimate)
      : std::runtime_error(message + " (estimated cost: " + cost_estimate + ")"),
        estimate_(std::move(cost_estimate)) {}

  const std::string& cost_estimate() const noexcept { return estimate_; }

 private:
  std::string estimate_;
};

/// A documented precondition does not hold (e.g. Omega on a non-QME action).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Internal consistency failure: a sign/normalization convention did not
/// close, or a value that must be exact came out malformed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dq
