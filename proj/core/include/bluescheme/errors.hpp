#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bluescheme {

/// Base class for all errors raised by the library.
class BlueprintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graded operation was applied to a presentation without degrees.
class UngradedError : public BlueprintError {
 public:
  using BlueprintError::BlueprintError;
};

/// A relation mixes degrees on a graded presentation.
class InhomogeneousRelationError : public BlueprintError {
 public:
  using BlueprintError::BlueprintError;
};

/// Generator names in a presentation must be distinct.
class DuplicateGeneratorError : public BlueprintError {
 public:
  using BlueprintError::BlueprintError;
};

/// A generator name was looked up that the presentation does not declare.
class UnknownGeneratorError : public BlueprintError {
 public:
  using BlueprintError::BlueprintError;
};

/// Spectrum enumeration refuses presentations with too many generators.
class EnumerationGuardError : public BlueprintError {
 public:
  using BlueprintError::BlueprintError;
};

/// Raised by chart construction when the inverted element is unsupported
/// (zero, not a generator, or not of degree 1).
class UnsupportedDegreeError : public BlueprintError {
 public:
  using BlueprintError::BlueprintError;
};

/// The subspace-counting oracle only accepts prime moduli.
class NonPrimeModulusError : public BlueprintError {
 public:
  using BlueprintError::BlueprintError;
};

/// DSL parse failure with source position (1-based).
class ParseError : public BlueprintError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : BlueprintError("parse error at " + std::to_string(line) + ":" +
                       std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace bluescheme
