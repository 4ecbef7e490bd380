#pragma once

#include <stdexcept>
#include <string>

namespace dls {

enum class ErrorKind {
  Reducible,
  DivisionByZero,
  FieldMismatch,
  NotARoot,
  NoGoodSpecialization,
  NotAFactor,
  DataUnavailable,
  BadParameters,
  PreconditionViolated,
  DegreeMismatch,
  SizeLimit,
  NotInvariant,
  HypothesisFailed,
  NotPGroup,
  NoBlocks,
  Parse,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind k, const std::string& msg)
      : std::runtime_error(std::string(kind_name(k)) + ": " + msg), kind_(k) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dls
