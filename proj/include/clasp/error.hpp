#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clasp {

enum class ErrorKind {
  InvalidArgument,
  InvalidDimension,
  InvalidKnot,
  UnsupportedPresentation,
  DegenerateForm,
  InadmissiblePrime,
  UnsupportedCharacter,
  InvalidBasis,
  PreconditionViolation,
  OutOfRange,
  NoLinearBound,
  HypothesisViolation,
  FamilyNotCertifying,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// Every library failure is reported through this type; `kind()` is stable
/// and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace clasp
