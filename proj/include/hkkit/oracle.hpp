#pragma once

#include "hkkit/bigint.hpp"
#include "hkkit/groebner.hpp"
#include "hkkit/hk_closed_form.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace hkkit {

inline constexpr std::uint64_t kDefaultQCap = 512;

/// p^e as a machine word if it is <= q_cap, otherwise nullopt.
std::optional<std::uint64_t> capped_q(const RingSpec& spec, std::uint64_t e, std::uint64_t q_cap);

/// Reduced Groebner basis of (x^q, y^q, x^n - y^n) over F_p with q = p^e.
/// Throws CapExceeded when q > q_cap.
GroebnerBasis frobenius_basis(const RingSpec& spec, std::uint64_t e,
                              std::uint64_t q_cap = kDefaultQCap);

/// dim_k k[x,y]/(x^q, y^q, x^n - y^n), computed by Buchberger and standard
/// monomial counting only. Throws CapExceeded when q > q_cap.
BigInt hk_brute(const RingSpec& spec, std::uint64_t e, std::uint64_t q_cap = kDefaultQCap);

struct PaperBasisCheck {
  std::uint64_t q = 0;
  std::uint64_t b = 0;
  bool telescoping = false;  // x^q - x^b y^(q-b) = (sum of x^(q-kn) y^((k-1)n)) * (x^n - y^n)
  bool s_pairs = false;      // all S-polynomials of G reduce to 0 modulo G
  bool staircase = false;    // buchberger's staircase is {x^n, x^b y^(q-b), y^q}
  std::string detail;

  bool ok() const noexcept { return telescoping && s_pairs && staircase; }
};

/// Checks that G = {x^b y^(q-b), y^q, x^n - y^n} is a Groebner basis of
/// (x^q, y^q, x^n - y^n). Requires q > n (PreconditionViolation otherwise)
/// and q <= q_cap (CapExceeded otherwise).
PaperBasisCheck verify_paper_gb(const RingSpec& spec, std::uint64_t e,
                                std::uint64_t q_cap = kDefaultQCap);

}  // namespace hkkit
