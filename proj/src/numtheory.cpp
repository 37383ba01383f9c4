#include "hkkit/numtheory.hpp"

#include "hkkit/error.hpp"

#include <array>
#include <limits>
#include <string>

namespace hkkit {

namespace {

using u128 = unsigned __int128;

void check_modulus(std::uint64_t modulus) {
  if (modulus < 2) {
    throw Error(ErrorCode::InvalidModulus,
                "modulus must be at least 2, got " + std::to_string(modulus));
  }
}

std::uint64_t pow_mod_raw(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// n odd, n > 3, n - 1 = d * 2^s.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) noexcept {
  std::uint64_t x = pow_mod_raw(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

Residue mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  check_modulus(modulus);
  return Residue{pow_mod_raw(base, exp, modulus), modulus};
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  check_modulus(n);
  a %= n;
  if (gcd(a, n) != 1) {
    throw Error(ErrorCode::NotAUnit, std::to_string(a) + " is not a unit modulo " + std::to_string(n));
  }
  std::uint64_t order = 1;
  std::uint64_t power = a;
  while (power != 1) {
    power = mul_mod(power, a, n);
    ++order;
  }
  return order;
}

bool is_prime(std::uint64_t m) noexcept {
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (m < 2) return false;
  for (std::uint64_t p : kBases) {
    if (m == p) return true;
    if (m % p == 0) return false;
  }
  // No factor below 41, so anything under 41^2 is prime.
  if (m < 41 * 41) return true;

  std::uint64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    if (!strong_probable_prime(m, a, d, s)) return false;
  }
  return true;
}

std::optional<std::uint64_t> find_prime_in_class(std::int64_t r, std::uint64_t s,
                                                 std::uint64_t search_limit) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "modulus s must be positive");
  if (search_limit < 2) throw Error(ErrorCode::InvalidArgument, "search limit must be at least 2");

  // Least nonnegative representative of r mod s.
  std::uint64_t start;
  if (r >= 0) {
    start = static_cast<std::uint64_t>(r) % s;
  } else {
    std::uint64_t mag = static_cast<std::uint64_t>(-(r + 1)) + 1;
    start = (s - mag % s) % s;
  }
  if (gcd(start, s) != 1) {
    throw Error(ErrorCode::NoPrimesPossible, "gcd(" + std::to_string(r) + ", " + std::to_string(s) +
                                                 ") != 1, the progression holds no primes");
  }

  for (std::uint64_t candidate = start; candidate <= search_limit;) {
    if (is_prime(candidate)) return candidate;
    if (candidate > std::numeric_limits<std::uint64_t>::max() - s) break;
    candidate += s;
  }
  return std::nullopt;
}

}  // namespace hkkit
