#pragma once

#include <cstdint>
#include <optional>

namespace hkkit {

/// A congruence class value mod modulus, with 0 <= value < modulus.
struct Residue {
  std::uint64_t value = 0;
  std::uint64_t modulus = 2;

  friend bool operator==(const Residue&, const Residue&) = default;
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

/// (a * b) mod m without overflow; m must be nonzero.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;

/// base^exp mod modulus by square-and-multiply, O(log exp) multiplications.
/// Throws ErrorCode::InvalidModulus when modulus < 2.
Residue mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus);

/// Least w >= 1 with a^w == 1 (mod n).
///
/// Strategy: naive power iteration, multiplying by a until the running
/// power returns to 1. The order is at most phi(n) < n, so this costs O(n)
/// modular multiplications and needs no factorization of the group order.
/// Throws InvalidModulus when n < 2 and NotAUnit when gcd(a, n) != 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

/// Exact for every 64-bit input: trial division by small primes followed by
/// Miller-Rabin with the first twelve prime bases, which is deterministic
/// below 3.3e24.
bool is_prime(std::uint64_t m) noexcept;

/// Least prime p == r (mod s) with p <= search_limit, scanning r mod s,
/// r mod s + s, ... . Returns nullopt when the progression has no prime up
/// to the limit. Throws NoPrimesPossible when gcd(r, s) != 1 and
/// InvalidArgument when s < 1 or search_limit < 2.
std::optional<std::uint64_t> find_prime_in_class(std::int64_t r, std::uint64_t s,
                                                 std::uint64_t search_limit);

}  // namespace hkkit
