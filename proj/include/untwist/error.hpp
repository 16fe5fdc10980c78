#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace untwist {

enum class ErrorKind {
  NotSymmetric,
  Singular,
  DimensionMismatch,
  NotNegativeDefinite,
  ParseError,
  ValidationError,
  NonPlanar,
  NotAlternating,
  ConventionMismatch,
  EvenDeterminant,
  GroupTooLarge,
  SignatureNonzero,
  NotAlternatingAndNoMatrix,
  NonPositive,
  OddS,
  MissingInvariants,
  InvalidArgument,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind codes so
/// that batch drivers can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace untwist
