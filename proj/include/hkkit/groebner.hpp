#pragma once

#include "hkkit/bigint.hpp"
#include "hkkit/fp_poly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hkkit {

/// Reduced lex(x>y) Groebner basis. Generators are monic and sorted by
/// decreasing leading monomial; staircase[k] is the leading monomial of
/// generators[k].
struct GroebnerBasis {
  std::vector<FpPoly> generators;
  std::vector<Monomial> staircase;
};

/// Standard S-polynomial of the monic normalizations of f and g.
FpPoly s_polynomial(const FpPoly& f, const FpPoly& g);

/// Multivariate division with full reduction. At each step the largest
/// remaining term is reduced by the first basis element (in list order) whose
/// leading monomial divides it, or moved to the remainder when none does.
FpPoly reduce(const FpPoly& f, std::span<const FpPoly> basis);

struct BuchbergerOptions {
  // Maximum number of S-pairs reduced before giving up.
  std::uint64_t pair_budget = 1'000'000;
  // Skip pairs with coprime leading monomials.
  bool coprime_criterion = true;
};

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first), followed by minimalization and inter-reduction. The result is the
/// unique reduced basis of the ideal. Throws EmptyGenerators on an empty or
/// all-zero input and PairBudgetExceeded when the budget runs out.
GroebnerBasis buchberger(std::span<const FpPoly> gens, const BuchbergerOptions& options = {});

/// Number of monomials outside the leading-term ideal generated by the
/// staircase, or nullopt when the quotient is infinite-dimensional (no pure
/// power of x or of y in the staircase).
std::optional<BigInt> standard_monomial_count(std::span<const Monomial> staircase);
std::optional<BigInt> standard_monomial_count(const GroebnerBasis& gb);

/// Canonical one-line-per-generator rendering, used to compare bases.
std::string render(const GroebnerBasis& gb);

}  // namespace hkkit
