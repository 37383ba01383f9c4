#include "hkkit/period.hpp"

#include "hkkit/error.hpp"
#include "hkkit/numtheory.hpp"

namespace hkkit {

const char* to_string(PeriodBranch branch) noexcept {
  return branch == PeriodBranch::Half ? "HALF" : "FULL";
}

PeriodReport period_of(const RingSpec& spec) {
  PeriodReport report;
  report.omega = multiplicative_order(spec.p(), spec.n());
  report.pi = report.omega;
  report.branch = PeriodBranch::Full;
  if (report.omega % 2 == 0) {
    report.involution_tested = true;
    report.involution_holds = mod_pow(spec.p(), report.omega / 2, spec.n()).value == spec.n() - 1;
    if (report.involution_holds) {
      report.pi = report.omega / 2;
      report.branch = PeriodBranch::Half;
    }
  }

  report.phi_profile.reserve(report.omega);
  std::uint64_t b = 1;
  for (std::uint64_t e = 0; e < report.omega; ++e) {
    report.phi_profile.push_back(Phi(b) * Phi(spec.n() - b));
    b = mul_mod(b, spec.p(), spec.n());
  }
  return report;
}

PeriodVerification verify_minimal_period(const RingSpec& spec, std::uint64_t window_multiplier) {
  if (window_multiplier < 2) {
    throw Error(ErrorCode::InvalidArgument, "window multiplier must be at least 2");
  }
  const PeriodReport report = period_of(spec);
  const std::uint64_t pi = report.pi;
  const std::uint64_t window = window_multiplier * report.omega;

  // phi(0), ..., phi(window + pi), evaluated directly rather than read from
  // the cyclic profile.
  std::vector<Phi> phi;
  phi.reserve(window + pi + 1);
  for (std::uint64_t e = 0; e <= window + pi; ++e) phi.push_back(phi_value(spec, e));

  PeriodVerification result;
  result.pi = pi;
  for (std::uint64_t e = 0; e <= window; ++e) {
    if (phi[e + pi] != phi[e]) {
      result.period_violation = PeriodWitness{pi, e};
      break;
    }
  }

  // The minimal period divides every period, so only divisors of pi matter.
  for (std::uint64_t d = 1; d < pi; ++d) {
    if (pi % d != 0) continue;
    bool rejected = false;
    for (std::uint64_t e = 0; e < report.omega; ++e) {
      if (phi[e + d] != phi[e]) {
        result.rejected_divisors.push_back(PeriodWitness{d, e});
        rejected = true;
        break;
      }
    }
    if (!rejected && !result.non_minimal_divisor) result.non_minimal_divisor = d;
  }

  result.ok = !result.period_violation && !result.non_minimal_divisor;
  return result;
}

}  // namespace hkkit
