#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liekit {

enum class ErrorKind {
  NonCommutative,
  NonAssociative,
  NoUnit,
  EvenCharacteristic,
  NotPrime,
  DivisionByZero,
  DimensionMismatch,
  DomainIsField,
  DomainMismatch,
  BaseFieldMismatch,
  NotAField,
  TooLarge,
  IndexOutOfRange,
  JacobiFails,
  GradingIncompatible,
  GradingGroupMismatch,
  NotGraded,
  NotAnIdeal,
  NotADerivation,
  NotSkew,
  FormDegenerate,
  FormNotInvariant,
  DegreeMismatch,
  NotACycle,
  UnknownName,
  BadPartition,
  BadParameter,
  CharacteristicMismatch,
  SyntaxError,
  SemanticError,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace liekit
