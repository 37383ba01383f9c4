#include "hkkit/error.hpp"
#include "hkkit/numtheory.hpp"
#include "hkkit/period.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hkkit;

TEST_CASE("period_of examples") {
  const auto monsky = period_of(RingSpec::make(2, 5));
  CHECK(monsky.omega == 4);
  CHECK(monsky.pi == 2);
  CHECK(monsky.branch == PeriodBranch::Half);
  CHECK(monsky.involution_tested);
  CHECK(monsky.involution_holds);
  CHECK(monsky.phi_profile == std::vector<Phi>{4, 6, 4, 6});

  const auto seven = period_of(RingSpec::make(2, 7));
  CHECK(seven.omega == 3);
  CHECK(seven.pi == 3);
  CHECK(seven.branch == PeriodBranch::Full);
  CHECK_FALSE(seven.involution_tested);
  CHECK(seven.phi_profile == std::vector<Phi>{6, 10, 12});

  const auto fifteen = period_of(RingSpec::make(2, 15));
  CHECK(fifteen.omega == 4);
  CHECK(fifteen.pi == 4);
  CHECK(fifteen.branch == PeriodBranch::Full);
  CHECK(fifteen.involution_tested);
  CHECK_FALSE(fifteen.involution_holds);
  CHECK(fifteen.phi_profile == std::vector<Phi>{14, 26, 44, 56});
}

TEST_CASE("n = 2 is the degenerate period-one case") {
  const auto report = period_of(RingSpec::make(3, 2));
  CHECK(report.omega == 1);
  CHECK(report.pi == 1);
  CHECK(report.branch == PeriodBranch::Full);
  CHECK(report.phi_profile == std::vector<Phi>{1});
}

TEST_CASE("verify_minimal_period examples") {
  const auto monsky = verify_minimal_period(RingSpec::make(2, 5), 3);
  CHECK(monsky.ok);
  CHECK(monsky.pi == 2);

  const auto trivial = verify_minimal_period(RingSpec::make(3, 2), 2);
  CHECK(trivial.ok);
  CHECK(trivial.pi == 1);
  CHECK(trivial.rejected_divisors.empty());

  const auto seven = verify_minimal_period(RingSpec::make(2, 7), 2);
  CHECK(seven.ok);
  REQUIRE(seven.rejected_divisors.size() == 1);
  CHECK(seven.rejected_divisors[0].d == 1);
  CHECK(seven.rejected_divisors[0].e == 0);
}

TEST_CASE("verify_minimal_period rejects a window multiplier below 2") {
  try {
    verify_minimal_period(RingSpec::make(2, 5), 1);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("period_of matches the brute-force minimal period") {
  for (std::uint64_t p = 2; p < 200; ++p) {
    if (!oracle::trial_division_prime(p)) continue;
    for (std::uint64_t n = 2; n <= 200; ++n) {
      if (n % p == 0) continue;
      const RingSpec spec = RingSpec::make(p, n);
      const PeriodReport report = period_of(spec);
      const std::uint64_t omega = oracle::enumerated_order(p, n);
      REQUIRE(report.omega == omega);

      std::vector<std::uint64_t> cycle;
      for (std::uint64_t e = 0; e < omega; ++e) cycle.push_back(oracle::phi(p, n, e));
      CHECK(report.pi == oracle::minimal_cyclic_period(cycle));

      REQUIRE(report.phi_profile.size() == omega);
      for (std::uint64_t e = 0; e < omega; ++e) CHECK(report.phi_profile[e] == cycle[e]);

      CHECK(omega % report.pi == 0);
      CHECK((2 * report.pi) % omega == 0);
      CHECK(phi_value(spec, report.pi) == phi_value(spec, 0));
      if (report.branch == PeriodBranch::Half) {
        CHECK(omega % 2 == 0);
        CHECK(report.pi * 2 == omega);
      } else {
        CHECK(report.pi == omega);
      }
      const bool half_expected = omega % 2 == 0 && oracle::slow_pow(p, omega / 2, n) == n - 1;
      CHECK((report.branch == PeriodBranch::Half) == half_expected);
    }
  }
}

TEST_CASE("divisor-only minimality agrees with a full sweep") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    for (std::uint64_t n = 2; n <= 120; ++n) {
      if (n % p == 0) continue;
      const RingSpec spec = RingSpec::make(p, n);
      const auto v = verify_minimal_period(spec, 2);
      CHECK(v.ok);
      CHECK_FALSE(v.period_violation);
      // Every d < pi, divisor or not, fails to be a period.
      for (std::uint64_t d = 1; d < v.pi; ++d) {
        bool is_period = true;
        for (std::uint64_t e = 0; e < 2 * v.pi && is_period; ++e) {
          is_period = oracle::phi(p, n, e + d) == oracle::phi(p, n, e);
        }
        CHECK_FALSE(is_period);
      }
    }
  }
}
