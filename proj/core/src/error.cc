#include "sgf/error.h"

namespace sgf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::DuplicateRule: return "DuplicateRule";
    case ErrorCode::UnknownLetterInImage: return "UnknownLetterInImage";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NoGrowingSeed: return "NoGrowingSeed";
    case ErrorCode::InsufficientOccurrences: return "InsufficientOccurrences";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::WrongAlphabetSize: return "WrongAlphabetSize";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::RootPresent: return "RootPresent";
    case ErrorCode::NoRootInInterval: return "NoRootInInterval";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_parse_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::EmptyImage:
    case ErrorCode::DuplicateRule:
    case ErrorCode::UnknownLetterInImage:
      return true;
    default:
      return false;
  }
}

}  // namespace sgf
