#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace cca {

/// Malformed group specification string.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A group or search would exceed the configured order cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An input violates an operation's precondition (bad table, bad
/// connection set, map that is not colour-permuting, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mechanized proof step failed. Carries the name of the step so the
/// diagnostic points at what broke.
class ProofStepError : public std::logic_error {
 public:
  ProofStepError(std::string step, const std::string& detail)
      : std::logic_error(step + ": " + detail), step_(std::move(step)) {}

  const std::string& step() const noexcept { return step_; }

 private:
  std::string step_;
};

}  // namespace cca
