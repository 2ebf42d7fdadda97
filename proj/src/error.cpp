#include "liekit/error.hpp"

namespace liekit {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonCommutative: return "NonCommutative";
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DomainIsField: return "DomainIsField";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::BaseFieldMismatch: return "BaseFieldMismatch";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::JacobiFails: return "JacobiFails";
    case ErrorKind::GradingIncompatible: return "GradingIncompatible";
    case ErrorKind::GradingGroupMismatch: return "GradingGroupMismatch";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotADerivation: return "NotADerivation";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::FormDegenerate: return "FormDegenerate";
    case ErrorKind::FormNotInvariant: return "FormNotInvariant";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::BadPartition: return "BadPartition";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::CharacteristicMismatch: return "CharacteristicMismatch";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

}  // namespace liekit
