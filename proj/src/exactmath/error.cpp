#include "clasp/error.hpp"

namespace clasp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidDimension: return "invalid-dimension";
    case ErrorKind::InvalidKnot: return "invalid-knot";
    case ErrorKind::UnsupportedPresentation: return "unsupported-presentation";
    case ErrorKind::DegenerateForm: return "degenerate-form";
    case ErrorKind::InadmissiblePrime: return "inadmissible-prime";
    case ErrorKind::UnsupportedCharacter: return "unsupported-character";
    case ErrorKind::InvalidBasis: return "invalid-basis";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NoLinearBound: return "no-linear-bound";
    case ErrorKind::HypothesisViolation: return "hypothesis-violation";
    case ErrorKind::FamilyNotCertifying: return "family-not-certifying";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::IoError: return "io-error";
  }
  return "unknown";
}

}  // namespace clasp
