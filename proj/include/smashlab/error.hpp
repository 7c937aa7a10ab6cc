#pragma once

#include <stdexcept>
#include <string>

namespace smashlab {

enum class ErrorKind {
  OrderCapExceeded,
  ElementNotInGroup,
  AmbientMismatch,
  NotASubgroup,
  AmbiguousEmbedding,
  NotAHomomorphism,
  HomTargetMismatch,
  InvalidPermutation,
  SyntaxError,
  UnboundName,
  PrimeMismatch,
  InvalidPrime,
  TrivialSubgroup,
  ShapeNotCovered,
  InvariantViolation,
  InvalidSequence,
  ClosureViolation,
  UnsupportedSupport,
  MissingPremise,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace smashlab
