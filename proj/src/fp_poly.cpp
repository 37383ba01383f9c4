#include "hkkit/fp_poly.hpp"

#include "hkkit/error.hpp"
#include "hkkit/numtheory.hpp"

#include <algorithm>

namespace hkkit {

namespace {

void check_same(const FpPoly& f, const FpPoly& g) {
  if (f.characteristic() != g.characteristic()) {
    throw Error(ErrorCode::CharacteristicMismatch,
                "characteristics " + std::to_string(f.characteristic()) + " and " +
                    std::to_string(g.characteristic()) + " differ");
  }
}

std::uint64_t reduce_signed(std::int64_t c, std::uint64_t p) {
  if (c >= 0) return static_cast<std::uint64_t>(c) % p;
  const std::uint64_t mag = static_cast<std::uint64_t>(-(c + 1)) + 1;
  return (p - mag % p) % p;
}

}  // namespace

bool divides(const Monomial& a, const Monomial& b) noexcept { return a.i <= b.i && a.j <= b.j; }

Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
  return {std::max(a.i, b.i), std::max(a.j, b.j)};
}

Monomial quotient(const Monomial& b, const Monomial& a) noexcept { return {b.i - a.i, b.j - a.j}; }

std::string to_string(const Monomial& m) {
  auto var = [](char v, std::uint64_t k) {
    return k == 1 ? std::string(1, v) : std::string(1, v) + "^" + std::to_string(k);
  };
  if (m.i == 0 && m.j == 0) return "1";
  if (m.j == 0) return var('x', m.i);
  if (m.i == 0) return var('y', m.j);
  return var('x', m.i) + "*" + var('y', m.j);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
  // Extended Euclid on signed 128-bit values.
  __int128 old_r = p, r = a, old_s = 0, s = 1;
  while (r != 0) {
    __int128 quot = old_r / r;
    __int128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw Error(ErrorCode::NotAUnit, std::to_string(a) + " is not invertible mod " + std::to_string(p));
  old_s %= static_cast<__int128>(p);
  if (old_s < 0) old_s += p;
  return static_cast<std::uint64_t>(old_s);
}

FpPoly::FpPoly(std::uint64_t characteristic) : p_(characteristic) {
  if (!is_prime(characteristic)) {
    throw Error(ErrorCode::InvalidArgument,
                "characteristic " + std::to_string(characteristic) + " is not prime");
  }
}

FpPoly::FpPoly(std::uint64_t characteristic,
               std::initializer_list<std::pair<Monomial, std::int64_t>> terms)
    : FpPoly(characteristic) {
  for (const auto& [m, c] : terms) add_term(m, reduce_signed(c, p_));
}

FpPoly FpPoly::monomial(std::uint64_t characteristic, Monomial m, std::uint64_t coeff) {
  FpPoly f(characteristic);
  f.add_term(m, coeff);
  return f;
}

std::pair<Monomial, std::uint64_t> FpPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading term of the zero polynomial");
  return *terms_.begin();
}

void FpPoly::add_term(const Monomial& m, std::uint64_t c) {
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  // Both summands are below p < 2^64; the sum cannot wrap when reduced in 128 bits.
  it->second = static_cast<std::uint64_t>((static_cast<unsigned __int128>(it->second) + c) % p_);
  if (it->second == 0) terms_.erase(it);
}

FpPoly add(const FpPoly& f, const FpPoly& g) {
  check_same(f, g);
  FpPoly out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, c);
  return out;
}

FpPoly negate(const FpPoly& f) {
  FpPoly out(f.characteristic());
  for (const auto& [m, c] : f.terms()) out.add_term(m, f.characteristic() - c);
  return out;
}

FpPoly sub(const FpPoly& f, const FpPoly& g) {
  check_same(f, g);
  FpPoly out = f;
  for (const auto& [m, c] : g.terms()) out.add_term(m, f.characteristic() - c);
  return out;
}

FpPoly mul_monomial(const FpPoly& f, const Monomial& m, std::uint64_t c) {
  const std::uint64_t p = f.characteristic();
  FpPoly out(p);
  c %= p;
  if (c == 0) return out;
  for (const auto& [t, a] : f.terms()) out.add_term({t.i + m.i, t.j + m.j}, mul_mod(a, c, p));
  return out;
}

FpPoly mul(const FpPoly& f, const FpPoly& g) {
  check_same(f, g);
  FpPoly out(f.characteristic());
  for (const auto& [m, c] : g.terms()) out = add(out, mul_monomial(f, m, c));
  return out;
}

FpPoly make_monic(const FpPoly& f) {
  const auto [lm, lc] = f.leading_term();
  if (lc == 1) return f;
  return mul_monomial(f, Monomial{}, inverse_mod(lc, f.characteristic()));
}

std::string to_string(const FpPoly& f) {
  if (f.is_zero()) return "0";
  const std::uint64_t p = f.characteristic();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c > p / 2;
    const std::uint64_t mag = negative ? p - c : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool constant = m.i == 0 && m.j == 0;
    if (mag != 1 || constant) {
      out += std::to_string(mag);
      if (!constant) out += "*";
    }
    if (!constant) out += to_string(m);
  }
  return out;
}

}  // namespace hkkit
