#include "untwist/error.hpp"

namespace untwist {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::NonPlanar: return "NonPlanar";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::ConventionMismatch: return "ConventionMismatch";
    case ErrorKind::EvenDeterminant: return "EvenDeterminant";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::SignatureNonzero: return "SignatureNonzero";
    case ErrorKind::NotAlternatingAndNoMatrix: return "NotAlternatingAndNoMatrix";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::OddS: return "OddS";
    case ErrorKind::MissingInvariants: return "MissingInvariants";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace untwist
