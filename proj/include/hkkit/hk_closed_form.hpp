#pragma once

#include "hkkit/bigint.hpp"

#include <cstdint>
#include <vector>

namespace hkkit {

/// The ring k[[x,y]]/(x^n - y^n) in characteristic p. The field k is not
/// represented; the Hilbert-Kunz function depends only on (p, n).
class RingSpec {
 public:
  /// Validates p prime, n >= 2 and p not dividing n. Throws
  /// ErrorCode::InvalidSpec with a message naming the violated hypothesis.
  static RingSpec make(std::uint64_t p, std::uint64_t n);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t n() const noexcept { return n_; }

  /// Hilbert-Kunz multiplicity, the coefficient of p^e in HK(e).
  std::uint64_t hk_multiplicity() const noexcept { return n_; }

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(std::uint64_t p, std::uint64_t n) : p_(p), n_(n) {}

  std::uint64_t p_;
  std::uint64_t n_;
};

struct HKRecord {
  std::uint64_t e = 0;
  BigInt q;         // p^e
  std::uint64_t b = 1;  // q mod n, in [1, n-1]
  BigInt hk;        // n*q - phi
  Phi phi;          // b*(n-b)
};

/// The representative b of p^e mod n with 1 <= b <= n-1.
std::uint64_t residue_b(const RingSpec& spec, std::uint64_t e);

/// p^e computed exactly.
BigInt frobenius_q(const RingSpec& spec, std::uint64_t e);

/// HK(e) = n*p^e - b(n-b), the k-dimension of k[x,y]/(x^q, y^q, x^n - y^n).
BigInt hk_value(const RingSpec& spec, std::uint64_t e);

/// The periodic term phi(e) = n*p^e - HK(e) = b(n-b).
Phi phi_value(const RingSpec& spec, std::uint64_t e);

HKRecord hk_record(const RingSpec& spec, std::uint64_t e);

/// Rows e = 0..e_max in order.
std::vector<HKRecord> hk_table(const RingSpec& spec, std::uint64_t e_max);

}  // namespace hkkit
