#include "transvect/error.hpp"

namespace transvect {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NoInvolution: return "NoInvolution";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotTransvection: return "NotTransvection";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotDense: return "NotDense";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::NotInvariantForm: return "NotInvariantForm";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::MissingForm: return "MissingForm";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::WrongField: return "WrongField";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::UnsupportedTag: return "UnsupportedTag";
    case ErrorCode::NotExplored: return "NotExplored";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace transvect
