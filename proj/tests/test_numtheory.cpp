#include "hkkit/error.hpp"
#include "hkkit/numtheory.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace hkkit;

TEST_CASE("mod_pow examples") {
  CHECK(mod_pow(2, 0, 5) == Residue{1, 5});
  CHECK(mod_pow(2, 2, 5).value == 4);
  CHECK(mod_pow(13, 2, 15).value == 4);
  CHECK(oracle::slow_pow(13, 2, 15) == 4);
  CHECK(mod_pow(0, 0, 7).value == 1);
}

TEST_CASE("mod_pow rejects small moduli") {
  for (std::uint64_t m : {0, 1}) {
    try {
      mod_pow(3, 4, m);
      FAIL("expected an exception");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidModulus);
    }
  }
}

TEST_CASE("mod_pow does not overflow near 2^64") {
  const std::uint64_t m = 18446744073709551557ULL;  // largest 64-bit prime
  // Fermat: a^(m-1) == 1.
  CHECK(mod_pow(123456789, m - 1, m).value == 1);
  CHECK(mod_pow(m - 1, 2, m).value == 1);
}

TEST_CASE("mod_pow agrees with repeated multiplication") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    const std::uint64_t m = 2 + rng() % 5000;
    const std::uint64_t base = rng() % 100000;
    const std::uint64_t exp = rng() % 300;
    CHECK(mod_pow(base, exp, m).value == oracle::slow_pow(base, exp, m));
  }
}

TEST_CASE("multiplicative_order examples") {
  CHECK(multiplicative_order(2, 7) == 3);
  CHECK(multiplicative_order(2, 5) == 4);
  CHECK(oracle::enumerated_order(2, 5) == 4);
  CHECK(multiplicative_order(1, 9) == 1);
  CHECK(multiplicative_order(2, 15) == 4);
  CHECK(multiplicative_order(13, 15) == 4);
}

TEST_CASE("multiplicative_order errors") {
  try {
    multiplicative_order(6, 9);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAUnit);
  }
  CHECK_THROWS_AS(multiplicative_order(1, 1), Error);
}

TEST_CASE("order is exact and divides the totient") {
  for (std::uint64_t n = 2; n <= 10000; n += (n < 400 ? 1 : 97)) {
    const std::uint64_t phi = oracle::totient(n);
    for (std::uint64_t a = 1; a < n; a += (n < 400 ? 1 : 13)) {
      if (std::gcd(a, n) != 1) continue;
      const std::uint64_t w = multiplicative_order(a, n);
      CHECK(mod_pow(a, w, n).value == 1);
      CHECK(phi % w == 0);
      if (n < 200) CHECK(w == oracle::enumerated_order(a, n));
    }
  }
}

TEST_CASE("is_prime examples") {
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(15));
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(oracle::trial_division_prime(561));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("is_prime matches trial division up to 10^6") {
  std::vector<bool> sieve(1'000'001, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t i = 2; i * i < sieve.size(); ++i) {
    if (!sieve[i]) continue;
    for (std::size_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
  }
  std::size_t mismatches = 0;
  for (std::uint64_t m = 0; m < sieve.size(); ++m) {
    if (is_prime(m) != sieve[m]) ++mismatches;
  }
  CHECK(mismatches == 0);
  // Spot-check the sieve itself against trial division.
  for (std::uint64_t m : {997ULL, 1001ULL, 7919ULL, 999983ULL, 999999ULL}) {
    CHECK(sieve[m] == oracle::trial_division_prime(m));
  }
}

TEST_CASE("is_prime on large strong pseudoprimes and primes") {
  CHECK_FALSE(is_prime(3215031751ULL));           // spsp to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));  // spsp to bases 2..23
  CHECK(is_prime(18446744073709551557ULL));
  CHECK_FALSE(is_prime(18446744073709551615ULL));
  CHECK(is_prime(4294967291ULL));
  CHECK_FALSE(is_prime(4294967291ULL * 3));
}

TEST_CASE("find_prime_in_class examples") {
  CHECK(find_prime_in_class(1, 4, 100) == 5u);
  CHECK(find_prime_in_class(2, 7, 100) == 2u);
  try {
    find_prime_in_class(2, 4, 100);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoPrimesPossible);
  }
}

TEST_CASE("find_prime_in_class not-found is distinct from an error") {
  CHECK_FALSE(find_prime_in_class(1, 100, 100).has_value());  // 1 and 101
  CHECK(find_prime_in_class(1, 100, 101) == 101u);
  CHECK(find_prime_in_class(-1, 4, 100) == 3u);
  CHECK(find_prime_in_class(9, 4, 100) == 5u);  // class of 1 mod 4
  CHECK(find_prime_in_class(0, 1, 100) == 2u);
  CHECK_THROWS_AS(find_prime_in_class(1, 4, 1), Error);
  CHECK_THROWS_AS(find_prime_in_class(1, 0, 10), Error);
}

TEST_CASE("find_prime_in_class output is prime, in class and minimal") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const std::uint64_t s = 1 + rng() % 200;
    const std::uint64_t r = rng() % s;
    const std::uint64_t limit = 2 + rng() % 3000;
    if (std::gcd(r, s) != 1) continue;
    const auto p = find_prime_in_class(static_cast<std::int64_t>(r), s, limit);
    std::optional<std::uint64_t> expected;
    for (std::uint64_t c = r; c <= limit; c += s) {
      if (oracle::trial_division_prime(c)) {
        expected = c;
        break;
      }
    }
    CHECK(p == expected);
  }
}
