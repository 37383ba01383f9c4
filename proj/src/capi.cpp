#include "hkkit/hkkit.h"

#include "hkkit/error.hpp"
#include "hkkit/groebner.hpp"
#include "hkkit/hk_closed_form.hpp"
#include "hkkit/numtheory.hpp"
#include "hkkit/oracle.hpp"
#include "hkkit/period.hpp"
#include "hkkit/realize.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

struct hkkit_ring {
  hkkit::RingSpec spec;
};

struct hkkit_table {
  struct Row {
    std::uint64_t e;
    std::string q;
    std::uint64_t b;
    std::string hk;
    std::string phi;
  };
  std::vector<Row> rows;
};

struct hkkit_period {
  hkkit::PeriodReport report;
  std::vector<std::string> profile;
};

struct hkkit_realization {
  std::uint64_t target_pi = 0;
  hkkit::SearchStats stats;
  std::optional<hkkit::RealizationResult> result;
  std::unique_ptr<hkkit_period> period;
};

struct hkkit_realization_list {
  std::vector<std::unique_ptr<hkkit_realization>> items;
};

struct hkkit_gb {
  hkkit::GroebnerBasis basis;
  std::vector<std::string> rendered;
  std::optional<std::string> count;
};

namespace {

thread_local std::string last_error;

hkkit_status map_code(hkkit::ErrorCode code) {
  using hkkit::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::CharacteristicMismatch:
    case ErrorCode::ZeroPolynomial:
    case ErrorCode::EmptyGenerators: return HKKIT_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidModulus: return HKKIT_ERR_INVALID_MODULUS;
    case ErrorCode::NotAUnit: return HKKIT_ERR_NOT_A_UNIT;
    case ErrorCode::NoPrimesPossible: return HKKIT_ERR_NO_PRIMES_POSSIBLE;
    case ErrorCode::InvalidSpec: return HKKIT_ERR_INVALID_SPEC;
    case ErrorCode::CapExceeded: return HKKIT_ERR_CAP_EXCEEDED;
    case ErrorCode::PreconditionViolation: return HKKIT_ERR_PRECONDITION;
    case ErrorCode::PairBudgetExceeded: return HKKIT_ERR_PAIR_BUDGET;
    case ErrorCode::Internal: return HKKIT_ERR_INTERNAL;
  }
  return HKKIT_ERR_INTERNAL;
}

hkkit_status fail(hkkit_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <class F>
hkkit_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    return body();
  } catch (const hkkit::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(HKKIT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HKKIT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HKKIT_ERR_INTERNAL, "unknown exception");
  }
}

hkkit_status write_string(const std::string& value, char* buf, std::size_t buf_size, std::size_t* out_len) {
  if (out_len) *out_len = value.size();
  if (!buf || buf_size < value.size() + 1) {
    return fail(HKKIT_ERR_BUFFER_TOO_SMALL,
                "buffer needs " + std::to_string(value.size() + 1) + " bytes");
  }
  std::memcpy(buf, value.c_str(), value.size() + 1);
  return HKKIT_OK;
}

#define HKKIT_REQUIRE(cond)                                                      \
  do {                                                                           \
    if (!(cond)) return fail(HKKIT_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

std::unique_ptr<hkkit_period> wrap_period(hkkit::PeriodReport report) {
  auto out = std::make_unique<hkkit_period>();
  for (const auto& v : report.phi_profile) out->profile.push_back(hkkit::to_decimal(v));
  out->report = std::move(report);
  return out;
}

std::unique_ptr<hkkit_realization> wrap_realization(std::uint64_t pi, const hkkit::SearchStats& stats,
                                                    std::optional<hkkit::RealizationResult> result) {
  auto out = std::make_unique<hkkit_realization>();
  out->target_pi = pi;
  out->stats = stats;
  if (result) out->period = wrap_period(result->report);
  out->result = std::move(result);
  return out;
}

}  // namespace

extern "C" {

const char* hkkit_status_name(hkkit_status status) {
  switch (status) {
    case HKKIT_OK: return "ok";
    case HKKIT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HKKIT_ERR_INVALID_MODULUS: return "invalid modulus";
    case HKKIT_ERR_NOT_A_UNIT: return "not a unit";
    case HKKIT_ERR_NO_PRIMES_POSSIBLE: return "no primes possible";
    case HKKIT_ERR_INVALID_SPEC: return "invalid ring spec";
    case HKKIT_ERR_CAP_EXCEEDED: return "q cap exceeded";
    case HKKIT_ERR_PRECONDITION: return "precondition violation";
    case HKKIT_ERR_NOT_FOUND: return "not found";
    case HKKIT_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case HKKIT_ERR_PAIR_BUDGET: return "pair budget exceeded";
    case HKKIT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hkkit_last_error_message(void) { return last_error.c_str(); }

hkkit_status hkkit_mod_pow(uint64_t base, uint64_t exp, uint64_t modulus, uint64_t* out) {
  HKKIT_REQUIRE(out);
  return guarded([&] {
    *out = hkkit::mod_pow(base, exp, modulus).value;
    return HKKIT_OK;
  });
}

hkkit_status hkkit_multiplicative_order(uint64_t a, uint64_t n, uint64_t* out) {
  HKKIT_REQUIRE(out);
  return guarded([&] {
    *out = hkkit::multiplicative_order(a, n);
    return HKKIT_OK;
  });
}

int hkkit_is_prime(uint64_t m) { return hkkit::is_prime(m) ? 1 : 0; }

hkkit_status hkkit_find_prime_in_class(int64_t r, uint64_t s, uint64_t limit, uint64_t* out) {
  HKKIT_REQUIRE(out);
  return guarded([&] {
    const auto p = hkkit::find_prime_in_class(r, s, limit);
    if (!p) return fail(HKKIT_ERR_NOT_FOUND, "no prime in the class up to " + std::to_string(limit));
    *out = *p;
    return HKKIT_OK;
  });
}

hkkit_status hkkit_ring_create(uint64_t p, uint64_t n, hkkit_ring** out) {
  HKKIT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new hkkit_ring{hkkit::RingSpec::make(p, n)};
    return HKKIT_OK;
  });
}

void hkkit_ring_destroy(hkkit_ring* ring) { delete ring; }
uint64_t hkkit_ring_p(const hkkit_ring* ring) { return ring ? ring->spec.p() : 0; }
uint64_t hkkit_ring_n(const hkkit_ring* ring) { return ring ? ring->spec.n() : 0; }
uint64_t hkkit_ring_hk_multiplicity(const hkkit_ring* ring) {
  return ring ? ring->spec.hk_multiplicity() : 0;
}

hkkit_status hkkit_residue_b(const hkkit_ring* ring, uint64_t e, uint64_t* out) {
  HKKIT_REQUIRE(ring && out);
  return guarded([&] {
    *out = hkkit::residue_b(ring->spec, e);
    return HKKIT_OK;
  });
}

hkkit_status hkkit_hk_value(const hkkit_ring* ring, uint64_t e, char* buf, size_t buf_size, size_t* out_len) {
  HKKIT_REQUIRE(ring);
  return guarded([&] { return write_string(hkkit::to_decimal(hkkit::hk_value(ring->spec, e)), buf, buf_size, out_len); });
}

hkkit_status hkkit_phi_value(const hkkit_ring* ring, uint64_t e, char* buf, size_t buf_size, size_t* out_len) {
  HKKIT_REQUIRE(ring);
  return guarded([&] { return write_string(hkkit::to_decimal(hkkit::phi_value(ring->spec, e)), buf, buf_size, out_len); });
}

hkkit_status hkkit_table_create(const hkkit_ring* ring, uint64_t e_max, hkkit_table** out) {
  HKKIT_REQUIRE(ring && out);
  *out = nullptr;
  return guarded([&] {
    auto table = std::make_unique<hkkit_table>();
    for (const auto& rec : hkkit::hk_table(ring->spec, e_max)) {
      table->rows.push_back({rec.e, hkkit::to_decimal(rec.q), rec.b, hkkit::to_decimal(rec.hk),
                             hkkit::to_decimal(rec.phi)});
    }
    *out = table.release();
    return HKKIT_OK;
  });
}

void hkkit_table_destroy(hkkit_table* table) { delete table; }
size_t hkkit_table_size(const hkkit_table* table) { return table ? table->rows.size() : 0; }

hkkit_status hkkit_table_row(const hkkit_table* table, size_t index, hkkit_row* out) {
  HKKIT_REQUIRE(table && out);
  if (index >= table->rows.size()) return fail(HKKIT_ERR_INVALID_ARGUMENT, "row index out of range");
  const auto& row = table->rows[index];
  *out = hkkit_row{row.e, row.q.c_str(), row.b, row.hk.c_str(), row.phi.c_str()};
  return HKKIT_OK;
}

hkkit_status hkkit_period_create(const hkkit_ring* ring, hkkit_period** out) {
  HKKIT_REQUIRE(ring && out);
  *out = nullptr;
  return guarded([&] {
    *out = wrap_period(hkkit::period_of(ring->spec)).release();
    return HKKIT_OK;
  });
}

void hkkit_period_destroy(hkkit_period* period) { delete period; }
uint64_t hkkit_period_omega(const hkkit_period* period) { return period ? period->report.omega : 0; }
uint64_t hkkit_period_pi(const hkkit_period* period) { return period ? period->report.pi : 0; }
hkkit_branch hkkit_period_branch(const hkkit_period* period) {
  return period && period->report.branch == hkkit::PeriodBranch::Half ? HKKIT_BRANCH_HALF
                                                                      : HKKIT_BRANCH_FULL;
}
int hkkit_period_involution_tested(const hkkit_period* period) {
  return period && period->report.involution_tested ? 1 : 0;
}
int hkkit_period_involution_holds(const hkkit_period* period) {
  return period && period->report.involution_holds ? 1 : 0;
}
size_t hkkit_period_profile_size(const hkkit_period* period) { return period ? period->profile.size() : 0; }
const char* hkkit_period_profile_at(const hkkit_period* period, size_t index) {
  if (!period || index >= period->profile.size()) return nullptr;
  return period->profile[index].c_str();
}

hkkit_status hkkit_verify_minimal_period(const hkkit_ring* ring, uint64_t window_multiplier,
                                         hkkit_period_check* out) {
  HKKIT_REQUIRE(ring && out);
  return guarded([&] {
    const auto v = hkkit::verify_minimal_period(ring->spec, window_multiplier);
    *out = hkkit_period_check{};
    out->ok = v.ok ? 1 : 0;
    out->pi = v.pi;
    if (v.period_violation) {
      out->has_violation = 1;
      out->violation_e = v.period_violation->e;
    }
    if (v.non_minimal_divisor) {
      out->has_smaller_period = 1;
      out->smaller_period = *v.non_minimal_divisor;
    }
    out->rejected_divisors = v.rejected_divisors.size();
    return HKKIT_OK;
  });
}

hkkit_status hkkit_realize(uint64_t pi, uint64_t n_limit, uint64_t p_limit, hkkit_realization** out) {
  HKKIT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto search = hkkit::realize(pi, n_limit, p_limit);
    const bool found = search.result.has_value();
    *out = wrap_realization(pi, search.stats, std::move(search.result)).release();
    if (!found) {
      return fail(HKKIT_ERR_NOT_FOUND, "no realization of period " + std::to_string(pi) +
                                           " within n <= " + std::to_string(n_limit) +
                                           ", p <= " + std::to_string(p_limit));
    }
    return HKKIT_OK;
  });
}

void hkkit_realization_destroy(hkkit_realization* r) { delete r; }
int hkkit_realization_found(const hkkit_realization* r) { return r && r->result ? 1 : 0; }
uint64_t hkkit_realization_target_pi(const hkkit_realization* r) { return r ? r->target_pi : 0; }
uint64_t hkkit_realization_p(const hkkit_realization* r) { return r && r->result ? r->result->spec.p() : 0; }
uint64_t hkkit_realization_n(const hkkit_realization* r) { return r && r->result ? r->result->spec.n() : 0; }
uint64_t hkkit_realization_residue(const hkkit_realization* r) {
  return r && r->result ? r->result->residue_used : 0;
}
uint64_t hkkit_realization_n_candidates(const hkkit_realization* r) { return r ? r->stats.n_candidates : 0; }
uint64_t hkkit_realization_p_candidates(const hkkit_realization* r) { return r ? r->stats.p_candidates : 0; }
const hkkit_period* hkkit_realization_period(const hkkit_realization* r) { return r ? r->period.get() : nullptr; }

hkkit_status hkkit_enumerate_realizations(uint64_t pi, uint64_t n_limit, uint64_t p_limit,
                                          uint64_t max_results, hkkit_realization_list** out) {
  HKKIT_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    auto list = std::make_unique<hkkit_realization_list>();
    for (auto& r : hkkit::enumerate_realizations(pi, n_limit, p_limit, max_results)) {
      const auto stats = r.search_stats;
      list->items.push_back(wrap_realization(pi, stats, std::move(r)));
    }
    *out = list.release();
    return HKKIT_OK;
  });
}

void hkkit_realization_list_destroy(hkkit_realization_list* list) { delete list; }
size_t hkkit_realization_list_size(const hkkit_realization_list* list) { return list ? list->items.size() : 0; }
const hkkit_realization* hkkit_realization_list_at(const hkkit_realization_list* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return list->items[index].get();
}

hkkit_status hkkit_gb_frobenius(const hkkit_ring* ring, uint64_t e, uint64_t q_cap, hkkit_gb** out) {
  HKKIT_REQUIRE(ring && out);
  *out = nullptr;
  return guarded([&] {
    auto gb = std::make_unique<hkkit_gb>();
    gb->basis = hkkit::frobenius_basis(ring->spec, e, q_cap);
    for (const auto& g : gb->basis.generators) gb->rendered.push_back(hkkit::to_string(g));
    if (const auto count = hkkit::standard_monomial_count(gb->basis)) gb->count = hkkit::to_decimal(*count);
    *out = gb.release();
    return HKKIT_OK;
  });
}

void hkkit_gb_destroy(hkkit_gb* gb) { delete gb; }
size_t hkkit_gb_size(const hkkit_gb* gb) { return gb ? gb->basis.generators.size() : 0; }
const char* hkkit_gb_generator(const hkkit_gb* gb, size_t index) {
  if (!gb || index >= gb->rendered.size()) return nullptr;
  return gb->rendered[index].c_str();
}
size_t hkkit_gb_term_count(const hkkit_gb* gb, size_t index) {
  if (!gb || index >= gb->basis.generators.size()) return 0;
  return gb->basis.generators[index].size();
}

hkkit_status hkkit_gb_term(const hkkit_gb* gb, size_t index, size_t term, uint64_t* x_exp, uint64_t* y_exp,
                           uint64_t* coeff) {
  HKKIT_REQUIRE(gb && x_exp && y_exp && coeff);
  if (index >= gb->basis.generators.size()) return fail(HKKIT_ERR_INVALID_ARGUMENT, "generator index out of range");
  const auto& terms = gb->basis.generators[index].terms();
  if (term >= terms.size()) return fail(HKKIT_ERR_INVALID_ARGUMENT, "term index out of range");
  auto it = terms.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(term));
  *x_exp = it->first.i;
  *y_exp = it->first.j;
  *coeff = it->second;
  return HKKIT_OK;
}

hkkit_status hkkit_gb_staircase(const hkkit_gb* gb, size_t index, uint64_t* x_exp, uint64_t* y_exp) {
  HKKIT_REQUIRE(gb && x_exp && y_exp);
  if (index >= gb->basis.staircase.size()) return fail(HKKIT_ERR_INVALID_ARGUMENT, "staircase index out of range");
  *x_exp = gb->basis.staircase[index].i;
  *y_exp = gb->basis.staircase[index].j;
  return HKKIT_OK;
}

const char* hkkit_gb_standard_monomials(const hkkit_gb* gb) {
  return gb && gb->count ? gb->count->c_str() : nullptr;
}

hkkit_status hkkit_hk_brute(const hkkit_ring* ring, uint64_t e, uint64_t q_cap, char* buf, size_t buf_size,
                            size_t* out_len) {
  HKKIT_REQUIRE(ring);
  return guarded([&] {
    return write_string(hkkit::to_decimal(hkkit::hk_brute(ring->spec, e, q_cap)), buf, buf_size, out_len);
  });
}

hkkit_status hkkit_verify_paper_gb(const hkkit_ring* ring, uint64_t e, uint64_t q_cap, hkkit_paper_gb_check* out) {
  HKKIT_REQUIRE(ring && out);
  return guarded([&] {
    const auto check = hkkit::verify_paper_gb(ring->spec, e, q_cap);
    *out = hkkit_paper_gb_check{check.ok() ? 1 : 0, check.q, check.b, check.telescoping ? 1 : 0,
                                check.s_pairs ? 1 : 0, check.staircase ? 1 : 0};
    if (!check.ok()) last_error = check.detail;
    return HKKIT_OK;
  });
}

}  // extern "C"
