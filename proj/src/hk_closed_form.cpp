#include "hkkit/hk_closed_form.hpp"

#include "hkkit/error.hpp"
#include "hkkit/numtheory.hpp"

#include <string>

namespace hkkit {

RingSpec RingSpec::make(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidSpec, "p = " + std::to_string(p) + " is not prime");
  }
  if (n < 2) {
    throw Error(ErrorCode::InvalidSpec, "n = " + std::to_string(n) + " must be greater than 1");
  }
  if (n % p == 0) {
    throw Error(ErrorCode::InvalidSpec, "p divides n: n = " + std::to_string(n) +
                                            " must not be divisible by p = " + std::to_string(p));
  }
  return RingSpec(p, n);
}

std::uint64_t residue_b(const RingSpec& spec, std::uint64_t e) {
  // gcd(p, n) = 1 keeps p^e off the zero class.
  return mod_pow(spec.p(), e, spec.n()).value;
}

BigInt frobenius_q(const RingSpec& spec, std::uint64_t e) {
  BigInt result = 1;
  BigInt base = spec.p();
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Phi phi_value(const RingSpec& spec, std::uint64_t e) {
  const std::uint64_t b = residue_b(spec, e);
  return Phi(b) * Phi(spec.n() - b);
}

BigInt hk_value(const RingSpec& spec, std::uint64_t e) {
  return BigInt(spec.n()) * frobenius_q(spec, e) - BigInt(phi_value(spec, e));
}

HKRecord hk_record(const RingSpec& spec, std::uint64_t e) {
  HKRecord rec;
  rec.e = e;
  rec.q = frobenius_q(spec, e);
  rec.b = residue_b(spec, e);
  rec.phi = Phi(rec.b) * Phi(spec.n() - rec.b);
  rec.hk = BigInt(spec.n()) * rec.q - BigInt(rec.phi);
  return rec;
}

std::vector<HKRecord> hk_table(const RingSpec& spec, std::uint64_t e_max) {
  std::vector<HKRecord> rows;
  rows.reserve(static_cast<std::size_t>(e_max) + 1);
  BigInt q = 1;
  for (std::uint64_t e = 0;; ++e) {
    HKRecord rec;
    rec.e = e;
    rec.q = q;
    rec.b = residue_b(spec, e);
    rec.phi = Phi(rec.b) * Phi(spec.n() - rec.b);
    rec.hk = BigInt(spec.n()) * q - BigInt(rec.phi);
    rows.push_back(std::move(rec));
    if (e == e_max) break;
    q *= spec.p();
  }
  return rows;
}

}  // namespace hkkit
