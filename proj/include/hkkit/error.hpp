#pragma once

#include <stdexcept>
#include <string>

namespace hkkit {

enum class ErrorCode {
  InvalidArgument,
  InvalidModulus,
  NotAUnit,
  NoPrimesPossible,
  InvalidSpec,
  CharacteristicMismatch,
  ZeroPolynomial,
  EmptyGenerators,
  CapExceeded,
  PreconditionViolation,
  PairBudgetExceeded,
  Internal,
};

const char* to_string(ErrorCode code) noexcept;

// All library failures are reported as hkkit::Error. "Not found" outcomes of
// bounded searches are values, not errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hkkit
