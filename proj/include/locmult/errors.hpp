#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace locmult {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or problem file. `position` is a byte offset
/// into the offending input (or a line number for problem files).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        detail_(message),
        position_(position) {}

  std::size_t position() const { return position_; }
  /// Message without the position suffix.
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// Operands live over different variable lists.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (ideal not m-primary,
/// J not contained in I, wrong generator count, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// A configured cap (pair queue, reduction steps, exponent size) was hit.
class ResourceCapError : public Error {
 public:
  using Error::Error;
};

/// Every randomized attempt failed; carries one diagnostic per attempt.
class TrialsExhausted : public Error {
 public:
  TrialsExhausted(const std::string& message, std::vector<std::string> diagnostics)
      : Error(message), diagnostics_(std::move(diagnostics)) {}

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

}  // namespace locmult
