#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontodp {

/// Parse failure in one of the line-oriented input formats. Carries the
/// source name and 1-based line number that produced the error.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// A triple uses a predicate the schema does not declare, or a constraint
/// references an unknown predicate/type.
class SchemaViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Saturation grew past the configured triple cap.
class FixpointBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation requiring a saturated database was given an unsaturated one.
class NotSaturated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Antecedent enumeration would have to explore more removable triples than
/// the configured cap allows.
class AntecedentBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidEpsilon : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The identification game has no meaningful instance (attack space empty or
/// a singleton, zero trials, or the truth outside the attack space).
class DegenerateGame : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ontodp
