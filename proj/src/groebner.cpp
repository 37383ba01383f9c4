#include "hkkit/groebner.hpp"

#include "hkkit/error.hpp"
#include "hkkit/numtheory.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hkkit {

namespace {

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  return std::min(a.i, b.i) == 0 && std::min(a.j, b.j) == 0;
}

// h -= c * m * g, in place.
void subtract_multiple(FpPoly& h, const FpPoly& g, const Monomial& m, std::uint64_t c) {
  const std::uint64_t p = h.characteristic();
  for (const auto& [t, a] : g.terms()) {
    h.add_term({t.i + m.i, t.j + m.j}, p - mul_mod(a, c, p));
  }
}

}  // namespace

FpPoly s_polynomial(const FpPoly& f, const FpPoly& g) {
  if (f.characteristic() != g.characteristic()) {
    throw Error(ErrorCode::CharacteristicMismatch, "S-polynomial of polynomials over different fields");
  }
  const FpPoly fm = make_monic(f);
  const FpPoly gm = make_monic(g);
  const Monomial l = lcm(fm.leading_monomial(), gm.leading_monomial());
  return sub(mul_monomial(fm, quotient(l, fm.leading_monomial()), 1),
             mul_monomial(gm, quotient(l, gm.leading_monomial()), 1));
}

FpPoly reduce(const FpPoly& f, std::span<const FpPoly> basis) {
  const std::uint64_t p = f.characteristic();
  for (const FpPoly& g : basis) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial in reduction basis");
    if (g.characteristic() != p) {
      throw Error(ErrorCode::CharacteristicMismatch, "reduction basis over a different field");
    }
  }

  std::vector<std::pair<Monomial, std::uint64_t>> leads;
  std::vector<std::uint64_t> lead_inverses;
  leads.reserve(basis.size());
  for (const FpPoly& g : basis) {
    leads.push_back(g.leading_term());
    lead_inverses.push_back(inverse_mod(leads.back().second, p));
  }

  FpPoly h = f;
  FpPoly remainder(p);
  while (!h.is_zero()) {
    const auto [m, c] = h.leading_term();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!divides(leads[k].first, m)) continue;
      subtract_multiple(h, basis[k], quotient(m, leads[k].first), mul_mod(c, lead_inverses[k], p));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(m, c);
      h.add_term(m, p - c);
    }
  }
  return remainder;
}

GroebnerBasis buchberger(std::span<const FpPoly> gens, const BuchbergerOptions& options) {
  std::vector<FpPoly> basis;
  for (const FpPoly& g : gens) {
    if (!basis.empty() && g.characteristic() != basis.front().characteristic()) {
      throw Error(ErrorCode::CharacteristicMismatch, "generators over different fields");
    }
    if (!g.is_zero()) basis.push_back(make_monic(g));
  }
  if (basis.empty()) throw Error(ErrorCode::EmptyGenerators, "buchberger needs a nonzero generator");

  // Pairs keyed by (lcm, i, j) so the map's first entry is the normal-strategy choice.
  struct PairKey {
    Monomial lcm;
    std::size_t i;
    std::size_t j;
    auto operator<=>(const PairKey&) const = default;
  };
  std::map<PairKey, bool> pairs;
  auto enqueue = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.emplace(PairKey{lcm(basis[i].leading_monomial(), basis[j].leading_monomial()), i, j}, true);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) enqueue(j);

  std::uint64_t processed = 0;
  while (!pairs.empty()) {
    const PairKey key = pairs.begin()->first;
    pairs.erase(pairs.begin());
    if (options.coprime_criterion &&
        coprime(basis[key.i].leading_monomial(), basis[key.j].leading_monomial())) {
      continue;
    }
    if (++processed > options.pair_budget) {
      throw Error(ErrorCode::PairBudgetExceeded,
                  "buchberger exceeded its budget of " + std::to_string(options.pair_budget) + " pairs");
    }
    FpPoly r = reduce(s_polynomial(basis[key.i], basis[key.j]), basis);
    if (r.is_zero()) continue;
    basis.push_back(make_monic(r));
    enqueue(basis.size() - 1);
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another
  // kept element's (ties keep the earliest).
  std::vector<FpPoly> minimal;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Monomial lm = basis[k].leading_monomial();
    bool redundant = false;
    for (std::size_t other = 0; other < basis.size() && !redundant; ++other) {
      if (other == k) continue;
      const Monomial olm = basis[other].leading_monomial();
      if (divides(olm, lm) && (olm != lm || other < k)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[k]);
  }

  // Inter-reduce each element against the rest. Leading monomials survive
  // because the basis is minimal.
  std::vector<FpPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<FpPoly> others;
    for (std::size_t other = 0; other < minimal.size(); ++other) {
      if (other != k) others.push_back(minimal[other]);
    }
    reduced.push_back(reduce(minimal[k], others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const FpPoly& a, const FpPoly& b) {
    return a.leading_monomial() > b.leading_monomial();
  });

  // Every basis element came out of the loop above, so it lies in the ideal;
  // the converse containment is checked here.
  for (const FpPoly& g : gens) {
    if (!g.is_zero() && !reduce(g, reduced).is_zero()) {
      throw Error(ErrorCode::Internal, "input generator " + to_string(g) + " does not reduce to 0");
    }
  }

  GroebnerBasis gb;
  for (FpPoly& g : reduced) {
    gb.staircase.push_back(g.leading_monomial());
    gb.generators.push_back(std::move(g));
  }
  return gb;
}

std::optional<BigInt> standard_monomial_count(std::span<const Monomial> staircase) {
  std::optional<std::uint64_t> x_power;
  std::optional<std::uint64_t> y_power;
  for (const Monomial& m : staircase) {
    if (m.j == 0) x_power = x_power ? std::min(*x_power, m.i) : m.i;
    if (m.i == 0) y_power = y_power ? std::min(*y_power, m.j) : m.j;
  }
  if (!x_power || !y_power) return std::nullopt;

  // Column i of the staircase has height min{ j : (i', j) in staircase, i' <= i }.
  // Heights only change at the x-exponents of staircase elements, so sweep
  // those breakpoints instead of every column.
  std::vector<Monomial> sorted(staircase.begin(), staircase.end());
  std::sort(sorted.begin(), sorted.end());
  BigInt count = 0;
  std::uint64_t height = *y_power;
  std::size_t k = 0;
  std::uint64_t column = 0;
  while (column < *x_power) {
    while (k < sorted.size() && sorted[k].i <= column) {
      height = std::min(height, sorted[k].j);
      ++k;
    }
    const std::uint64_t next = k < sorted.size() ? std::min(sorted[k].i, *x_power) : *x_power;
    count += BigInt(next - column) * height;
    column = next;
  }
  return count;
}

std::optional<BigInt> standard_monomial_count(const GroebnerBasis& gb) {
  return standard_monomial_count(std::span<const Monomial>(gb.staircase));
}

std::string render(const GroebnerBasis& gb) {
  std::string out;
  for (const FpPoly& g : gb.generators) {
    out += to_string(g);
    out += '\n';
  }
  return out;
}

}  // namespace hkkit
