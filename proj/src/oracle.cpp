#include "hkkit/oracle.hpp"

#include "hkkit/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace hkkit {

namespace {

std::uint64_t require_q(const RingSpec& spec, std::uint64_t e, std::uint64_t q_cap) {
  const auto q = capped_q(spec, e, q_cap);
  if (!q) {
    throw Error(ErrorCode::CapExceeded, std::to_string(spec.p()) + "^" + std::to_string(e) +
                                            " exceeds the q cap " + std::to_string(q_cap));
  }
  return *q;
}

FpPoly binomial(std::uint64_t p, std::uint64_t n) {
  return FpPoly(p, {{{n, 0}, 1}, {{0, n}, -1}});
}

}  // namespace

std::optional<std::uint64_t> capped_q(const RingSpec& spec, std::uint64_t e, std::uint64_t q_cap) {
  std::uint64_t q = 1;
  for (std::uint64_t k = 0; k < e; ++k) {
    if (q > q_cap / spec.p()) return std::nullopt;
    q *= spec.p();
  }
  if (q > q_cap) return std::nullopt;
  return q;
}

GroebnerBasis frobenius_basis(const RingSpec& spec, std::uint64_t e, std::uint64_t q_cap) {
  const std::uint64_t q = require_q(spec, e, q_cap);
  const std::uint64_t p = spec.p();
  const std::array<FpPoly, 3> gens{FpPoly::monomial(p, {q, 0}), FpPoly::monomial(p, {0, q}),
                                   binomial(p, spec.n())};
  return buchberger(gens);
}

BigInt hk_brute(const RingSpec& spec, std::uint64_t e, std::uint64_t q_cap) {
  const GroebnerBasis gb = frobenius_basis(spec, e, q_cap);
  const auto count = standard_monomial_count(gb);
  if (!count) {
    throw Error(ErrorCode::Internal, "quotient by a Frobenius power came out infinite-dimensional");
  }
  return *count;
}

PaperBasisCheck verify_paper_gb(const RingSpec& spec, std::uint64_t e, std::uint64_t q_cap) {
  const std::uint64_t p = spec.p();
  const std::uint64_t n = spec.n();

  // q <= n can be decided without the cap: p^e <= n fits in a word.
  if (const auto small = capped_q(spec, e, n)) {
    throw Error(ErrorCode::PreconditionViolation,
                "q = " + std::to_string(*small) + " does not exceed n = " + std::to_string(n));
  }
  PaperBasisCheck check;
  check.q = require_q(spec, e, q_cap);
  const std::uint64_t q = check.q;
  check.b = q % n;
  const std::uint64_t b = check.b;

  const FpPoly corner = FpPoly::monomial(p, {b, q - b});
  const FpPoly y_power = FpPoly::monomial(p, {0, q});
  const FpPoly relation = binomial(p, n);
  const std::array<FpPoly, 3> paper_basis{corner, y_power, relation};

  // x^q - x^b y^(q-b) = (x^(q-n) + x^(q-2n) y^n + ... + x^b y^(q-b-n)) (x^n - y^n)
  FpPoly cofactor(p);
  for (std::uint64_t k = 1; k * n <= q - b; ++k) cofactor.add_term({q - k * n, (k - 1) * n}, 1);
  const FpPoly lhs = sub(FpPoly::monomial(p, {q, 0}), corner);
  check.telescoping = mul(cofactor, relation) == lhs;
  if (!check.telescoping) check.detail += "telescoping identity failed; ";

  check.s_pairs = true;
  for (std::size_t i = 0; i < paper_basis.size(); ++i) {
    for (std::size_t j = i + 1; j < paper_basis.size(); ++j) {
      const FpPoly r = reduce(s_polynomial(paper_basis[i], paper_basis[j]), paper_basis);
      if (!r.is_zero()) {
        check.s_pairs = false;
        check.detail += "S(g" + std::to_string(i) + ", g" + std::to_string(j) +
                        ") leaves remainder " + to_string(r) + "; ";
      }
    }
  }

  std::vector<Monomial> expected;
  const std::array<Monomial, 3> leads{Monomial{n, 0}, Monomial{b, q - b}, Monomial{0, q}};
  for (const Monomial& m : leads) {
    const bool redundant = std::any_of(leads.begin(), leads.end(), [&](const Monomial& other) {
      return other != m && divides(other, m);
    });
    if (!redundant) expected.push_back(m);
  }
  std::sort(expected.begin(), expected.end(), std::greater<>());

  const GroebnerBasis gb = frobenius_basis(spec, e, q_cap);
  check.staircase = gb.staircase == expected;
  if (!check.staircase) {
    check.detail += "computed staircase {";
    for (std::size_t k = 0; k < gb.staircase.size(); ++k) {
      if (k) check.detail += ", ";
      check.detail += to_string(gb.staircase[k]);
    }
    check.detail += "} differs from the expected one; ";
  }
  return check;
}

}  // namespace hkkit
