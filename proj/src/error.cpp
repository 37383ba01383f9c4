#include "hkkit/error.hpp"

namespace hkkit {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::InvalidModulus: return "invalid modulus";
    case ErrorCode::NotAUnit: return "not a unit";
    case ErrorCode::NoPrimesPossible: return "no primes possible";
    case ErrorCode::InvalidSpec: return "invalid ring spec";
    case ErrorCode::CharacteristicMismatch: return "characteristic mismatch";
    case ErrorCode::ZeroPolynomial: return "zero polynomial";
    case ErrorCode::EmptyGenerators: return "empty generator list";
    case ErrorCode::CapExceeded: return "q cap exceeded";
    case ErrorCode::PreconditionViolation: return "precondition violation";
    case ErrorCode::PairBudgetExceeded: return "pair budget exceeded";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace hkkit
