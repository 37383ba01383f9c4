#include "hkkit/error.hpp"
#include "hkkit/hk_closed_form.hpp"
#include "hkkit/numtheory.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hkkit;

TEST_CASE("RingSpec validation names the violated hypothesis") {
  auto message_for = [](std::uint64_t p, std::uint64_t n) -> std::string {
    try {
      RingSpec::make(p, n);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidSpec);
      return e.what();
    }
    return "";
  };
  CHECK(message_for(4, 5).find("not prime") != std::string::npos);
  CHECK(message_for(3, 1).find("greater than 1") != std::string::npos);
  CHECK(message_for(2, 4).find("p divides n") != std::string::npos);
  CHECK(message_for(5, 15).find("not be divisible by p") != std::string::npos);

  const RingSpec spec = RingSpec::make(2, 5);
  CHECK(spec.p() == 2);
  CHECK(spec.n() == 5);
  CHECK(spec.hk_multiplicity() == 5);
}

TEST_CASE("residue_b examples") {
  CHECK(residue_b(RingSpec::make(2, 5), 3) == 3);
  CHECK(residue_b(RingSpec::make(2, 7), 0) == 1);
  CHECK(residue_b(RingSpec::make(13, 15), 1) == 13);
}

TEST_CASE("hk_value examples") {
  CHECK(hk_value(RingSpec::make(2, 5), 3) == 34);  // 5*8 - 6
  CHECK(hk_value(RingSpec::make(2, 7), 2) == 16);  // 7*4 - 12
  CHECK(hk_value(RingSpec::make(3, 5), 0) == 1);
}

TEST_CASE("phi_value examples") {
  CHECK(phi_value(RingSpec::make(2, 15), 3) == 56);
  CHECK(phi_value(RingSpec::make(2, 5), 0) == 4);
  CHECK(phi_value(RingSpec::make(2, 7), 1) == 10);
}

TEST_CASE("hk_table examples") {
  const auto monsky = hk_table(RingSpec::make(2, 5), 1);
  REQUIRE(monsky.size() == 2);
  CHECK(monsky[0].e == 0);
  CHECK(monsky[0].q == 1);
  CHECK(monsky[0].b == 1);
  CHECK(monsky[0].hk == 1);
  CHECK(monsky[0].phi == 4);
  CHECK(monsky[1].e == 1);
  CHECK(monsky[1].q == 2);
  CHECK(monsky[1].b == 2);
  CHECK(monsky[1].hk == 4);
  CHECK(monsky[1].phi == 6);

  const auto smallest = hk_table(RingSpec::make(3, 2), 0);
  REQUIRE(smallest.size() == 1);
  CHECK(smallest[0].hk == 1);
  CHECK(smallest[0].phi == 1);

  const auto seven = hk_table(RingSpec::make(2, 7), 2);
  REQUIRE(seven.size() == 3);
  CHECK(seven[0].phi == 6);
  CHECK(seven[1].phi == 10);
  CHECK(seven[2].phi == 12);
}

TEST_CASE("records satisfy their invariants and agree with the single-row calls") {
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    for (std::uint64_t n = 2; n <= 40; ++n) {
      if (n % p == 0) continue;
      const RingSpec spec = RingSpec::make(p, n);
      const auto rows = hk_table(spec, 20);
      BigInt q = 1;
      for (const auto& rec : rows) {
        CHECK(rec.q == q);
        CHECK(rec.b >= 1);
        CHECK(rec.b <= n - 1);
        CHECK(BigInt(rec.b) == rec.q % n);
        CHECK(rec.phi == Phi(rec.b) * Phi(n - rec.b));
        CHECK(rec.hk == BigInt(n) * rec.q - BigInt(rec.phi));
        CHECK(rec.phi >= n - 1);
        CHECK(rec.phi <= Phi((n / 2) * ((n + 1) / 2)));
        CHECK(rec.hk == hk_value(spec, rec.e));
        CHECK(rec.phi == phi_value(spec, rec.e));
        q *= p;
      }
    }
  }
}

TEST_CASE("hk_value is exact far beyond 64 bits") {
  const RingSpec spec = RingSpec::make(2, 5);
  // 2^200 == 1 (mod 5) since 200 is a multiple of 4, so phi = 4.
  const BigInt expected = BigInt(5) * (BigInt(1) << 200) - 4;
  CHECK(hk_value(spec, 200) == expected);
  CHECK(frobenius_q(spec, 200) == (BigInt(1) << 200));
}

TEST_CASE("small-q identity: HK(e) = q^2 whenever q < n") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 2; n <= 50; ++n) {
      if (n % p == 0) continue;
      const RingSpec spec = RingSpec::make(p, n);
      BigInt q = 1;
      for (std::uint64_t e = 0; q < n; ++e, q *= p) CHECK(hk_value(spec, e) == q * q);
    }
  }
}

TEST_CASE("phi depends only on e mod omega") {
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    for (std::uint64_t n = 2; n <= 30; ++n) {
      if (n % p == 0) continue;
      const RingSpec spec = RingSpec::make(p, n);
      const std::uint64_t omega = oracle::enumerated_order(p, n);
      for (std::uint64_t e = 0; e <= 3 * omega; ++e) {
        CHECK(phi_value(spec, e) == phi_value(spec, e % omega));
        CHECK(phi_value(spec, e) == oracle::phi(p, n, e));
      }
    }
  }
}
