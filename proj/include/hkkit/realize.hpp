#pragma once

#include "hkkit/hk_closed_form.hpp"
#include "hkkit/period.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hkkit {

struct SearchStats {
  std::uint64_t n_candidates = 0;  // values of n examined
  std::uint64_t p_candidates = 0;  // (residue class or p) candidates examined

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct RealizationResult {
  std::uint64_t target_pi = 0;
  RingSpec spec;
  PeriodReport report;
  std::uint64_t residue_used = 0;  // p mod n
  SearchStats search_stats;
};

struct RealizationSearch {
  std::optional<RealizationResult> result;  // empty when the limits ran out
  SearchStats stats;
};

/// Builds (p, n) with phi of exact period pi: n prime with n == 1 (mod 2pi),
/// p prime of order 2pi mod n, so p^pi is the unique involution -1 mod n.
/// Search order is smallest n, then smallest residue r, then smallest p.
/// Throws InvalidArgument when pi < 1 or a limit is below 2, and
/// ErrorCode::Internal if a constructed ring fails its own period check.
RealizationSearch realize(std::uint64_t pi, std::uint64_t n_limit, std::uint64_t p_limit);

/// Every valid (p, n) with n <= n_limit, prime p <= p_limit, gcd(p, n) = 1
/// whose phi has exact period pi, ordered by (n, p) and truncated at
/// max_results. Covers composite n and the Full branch.
std::vector<RealizationResult> enumerate_realizations(std::uint64_t pi, std::uint64_t n_limit,
                                                      std::uint64_t p_limit,
                                                      std::uint64_t max_results);

}  // namespace hkkit
