#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

namespace hkkit {

/// x^i y^j. The defaulted ordering is lex with x > y.
struct Monomial {
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

bool divides(const Monomial& a, const Monomial& b) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b) noexcept;
/// b / a; requires divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a) noexcept;
std::string to_string(const Monomial& m);

/// Inverse of a nonzero residue modulo prime p, by extended Euclid.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);

/// Sparse polynomial in F_p[x,y]. Coefficients are kept in [1, p-1]; the zero
/// polynomial has no terms. Terms iterate from the lex-largest monomial down.
class FpPoly {
 public:
  using Terms = std::map<Monomial, std::uint64_t, std::greater<>>;

  explicit FpPoly(std::uint64_t characteristic);
  FpPoly(std::uint64_t characteristic, std::initializer_list<std::pair<Monomial, std::int64_t>> terms);

  static FpPoly monomial(std::uint64_t characteristic, Monomial m, std::uint64_t coeff = 1);

  std::uint64_t characteristic() const noexcept { return p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Throws ErrorCode::ZeroPolynomial on the zero polynomial.
  std::pair<Monomial, std::uint64_t> leading_term() const;
  Monomial leading_monomial() const { return leading_term().first; }

  /// Adds c*m in place, dropping the term if it cancels.
  void add_term(const Monomial& m, std::uint64_t c);

  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  std::uint64_t p_;
  Terms terms_;
};

/// Arithmetic throws ErrorCode::CharacteristicMismatch on mixed inputs.
FpPoly add(const FpPoly& f, const FpPoly& g);
FpPoly sub(const FpPoly& f, const FpPoly& g);
FpPoly negate(const FpPoly& f);
/// c * m * f.
FpPoly mul_monomial(const FpPoly& f, const Monomial& m, std::uint64_t c);
FpPoly mul(const FpPoly& f, const FpPoly& g);
/// f scaled so its leading coefficient is 1. Throws on zero.
FpPoly make_monic(const FpPoly& f);

/// Human-readable form such as "x^5 - y^5" or "x*y^3". Coefficients are shown
/// by their symmetric representative.
std::string to_string(const FpPoly& f);

}  // namespace hkkit
