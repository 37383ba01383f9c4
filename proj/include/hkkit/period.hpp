#pragma once

#include "hkkit/bigint.hpp"
#include "hkkit/hk_closed_form.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hkkit {

enum class PeriodBranch {
  Half,  // pi = omega / 2
  Full,  // pi = omega
};

const char* to_string(PeriodBranch branch) noexcept;

struct PeriodReport {
  std::uint64_t omega = 1;  // order of p mod n
  std::uint64_t pi = 1;     // exact period of phi
  PeriodBranch branch = PeriodBranch::Full;
  bool involution_tested = false;  // omega even, so p^(omega/2) was compared to n-1
  bool involution_holds = false;   // p^(omega/2) == n-1 (mod n)
  std::vector<Phi> phi_profile;    // phi(0), ..., phi(omega-1)
};

/// Classifies the period of phi from the multiplicative order of p mod n:
/// pi = omega/2 exactly when omega is even and p^(omega/2) == n-1 (mod n).
/// The congruence is tested against the canonical representative n-1.
PeriodReport period_of(const RingSpec& spec);

struct PeriodWitness {
  std::uint64_t d = 0;  // candidate period
  std::uint64_t e = 0;  // phi(e + d) != phi(e)
};

struct PeriodVerification {
  bool ok = false;
  std::uint64_t pi = 0;
  // Set when phi(e + pi) != phi(e) somewhere in the window.
  std::optional<PeriodWitness> period_violation;
  // Set when some proper divisor of pi is also a period on [0, omega).
  std::optional<std::uint64_t> non_minimal_divisor;
  // One witness per proper divisor d of pi showing d is not a period.
  std::vector<PeriodWitness> rejected_divisors;
};

/// Checks that pi from period_of is a period of phi from e = 0 on
/// 0 <= e <= window_multiplier * omega, and that no proper divisor of pi is.
/// Throws InvalidArgument when window_multiplier < 2.
PeriodVerification verify_minimal_period(const RingSpec& spec,
                                         std::uint64_t window_multiplier);

}  // namespace hkkit
