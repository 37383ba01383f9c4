#include "hkkit/realize.hpp"

#include "hkkit/error.hpp"
#include "hkkit/numtheory.hpp"

#include <limits>
#include <string>

namespace hkkit {

namespace {

void check_inputs(std::uint64_t pi, std::uint64_t n_limit, std::uint64_t p_limit) {
  if (pi < 1) throw Error(ErrorCode::InvalidArgument, "target period must be at least 1");
  if (n_limit < 2 || p_limit < 2) {
    throw Error(ErrorCode::InvalidArgument, "search limits must be at least 2");
  }
}

[[noreturn]] void library_bug(const std::string& what) {
  throw Error(ErrorCode::Internal, "realization invariant broken: " + what);
}

}  // namespace

RealizationSearch realize(std::uint64_t pi, std::uint64_t n_limit, std::uint64_t p_limit) {
  check_inputs(pi, n_limit, p_limit);
  RealizationSearch search;
  if (pi > (std::numeric_limits<std::uint64_t>::max() - 1) / 2) return search;
  const std::uint64_t omega = 2 * pi;

  for (std::uint64_t n = omega + 1; n <= n_limit; n += omega) {
    if (!is_prime(n)) continue;
    ++search.stats.n_candidates;

    for (std::uint64_t r = 2; r < n; ++r) {
      // Cheap filter before the exact order computation.
      if (mod_pow(r, omega, n).value != 1) continue;
      if (multiplicative_order(r, n) != omega) continue;
      ++search.stats.p_candidates;

      const auto p = find_prime_in_class(static_cast<std::int64_t>(r), n, p_limit);
      if (!p) continue;

      // U(n) is cyclic of even order, so its only involution is -1.
      if (mod_pow(*p, pi, n).value != n - 1) {
        library_bug("p^pi != -1 mod n for p = " + std::to_string(*p) + ", n = " + std::to_string(n));
      }
      const RingSpec spec = RingSpec::make(*p, n);
      PeriodReport report = period_of(spec);
      if (report.pi != pi || report.branch != PeriodBranch::Half) {
        library_bug("period_of(" + std::to_string(*p) + ", " + std::to_string(n) +
                    ") gave pi = " + std::to_string(report.pi));
      }
      search.result = RealizationResult{pi, spec, std::move(report), r, search.stats};
      return search;
    }
    if (n > std::numeric_limits<std::uint64_t>::max() - omega) break;
  }
  return search;
}

std::vector<RealizationResult> enumerate_realizations(std::uint64_t pi, std::uint64_t n_limit,
                                                      std::uint64_t p_limit,
                                                      std::uint64_t max_results) {
  check_inputs(pi, n_limit, p_limit);
  std::vector<RealizationResult> out;
  SearchStats stats;
  for (std::uint64_t n = 2; n <= n_limit && out.size() < max_results; ++n) {
    ++stats.n_candidates;
    for (std::uint64_t p = 2; p <= p_limit && out.size() < max_results; ++p) {
      if (!is_prime(p) || gcd(p, n) != 1) continue;
      ++stats.p_candidates;
      // pi is omega or omega/2, so other orders cannot match.
      const std::uint64_t omega = multiplicative_order(p, n);
      if (omega != pi && omega != 2 * pi) continue;
      const RingSpec spec = RingSpec::make(p, n);
      PeriodReport report = period_of(spec);
      if (report.pi != pi) continue;
      out.push_back(RealizationResult{pi, spec, std::move(report), p % n, stats});
    }
  }
  return out;
}

}  // namespace hkkit
