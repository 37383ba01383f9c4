/*
 * hkkit C API: Hilbert-Kunz functions of k[[x,y]]/(x^n - y^n) in prime
 * characteristic, the period of their periodic term, period realization
 * search and a Groebner-basis colength oracle.
 *
 * Conventions:
 *  - Every fallible call returns hkkit_status. On failure a message is
 *    available from hkkit_last_error_message() on the calling thread.
 *  - Objects are opaque handles created by *_create (or a producing call)
 *    and released with the matching *_destroy. Destroy functions accept NULL.
 *  - Strings returned as const char* are owned by the handle they came from
 *    and stay valid until it is destroyed.
 *  - Unbounded integers cross the boundary as decimal strings. Calls that
 *    write one into a caller buffer take (buf, buf_size, out_len): out_len
 *    receives the length without the terminator; when buf is NULL or too
 *    small the call returns HKKIT_ERR_BUFFER_TOO_SMALL and writes nothing.
 *  - All functions are reentrant; handles may be shared read-only between
 *    threads.
 */
#ifndef HKKIT_H
#define HKKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(HKKIT_BUILDING_LIBRARY)
#define HKKIT_API __attribute__((visibility("default")))
#else
#define HKKIT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hkkit_status {
  HKKIT_OK = 0,
  HKKIT_ERR_INVALID_ARGUMENT = 1,
  HKKIT_ERR_INVALID_MODULUS = 2,
  HKKIT_ERR_NOT_A_UNIT = 3,
  HKKIT_ERR_NO_PRIMES_POSSIBLE = 4,
  HKKIT_ERR_INVALID_SPEC = 5,
  HKKIT_ERR_CAP_EXCEEDED = 6,
  HKKIT_ERR_PRECONDITION = 7,
  HKKIT_ERR_NOT_FOUND = 8,
  HKKIT_ERR_BUFFER_TOO_SMALL = 9,
  HKKIT_ERR_PAIR_BUDGET = 10,
  HKKIT_ERR_INTERNAL = 11
} hkkit_status;

HKKIT_API const char* hkkit_status_name(hkkit_status status);
HKKIT_API const char* hkkit_last_error_message(void);

/* ---- number theory ---------------------------------------------------- */

HKKIT_API hkkit_status hkkit_mod_pow(uint64_t base, uint64_t exp, uint64_t modulus, uint64_t* out);
HKKIT_API hkkit_status hkkit_multiplicative_order(uint64_t a, uint64_t n, uint64_t* out);
HKKIT_API int hkkit_is_prime(uint64_t m);
/* HKKIT_ERR_NOT_FOUND when no prime <= limit lies in the class. */
HKKIT_API hkkit_status hkkit_find_prime_in_class(int64_t r, uint64_t s, uint64_t limit, uint64_t* out);

/* ---- rings and the closed form ----------------------------------------- */

typedef struct hkkit_ring hkkit_ring;

/* HKKIT_ERR_INVALID_SPEC unless p is prime, n >= 2 and p does not divide n. */
HKKIT_API hkkit_status hkkit_ring_create(uint64_t p, uint64_t n, hkkit_ring** out);
HKKIT_API void hkkit_ring_destroy(hkkit_ring* ring);
HKKIT_API uint64_t hkkit_ring_p(const hkkit_ring* ring);
HKKIT_API uint64_t hkkit_ring_n(const hkkit_ring* ring);
HKKIT_API uint64_t hkkit_ring_hk_multiplicity(const hkkit_ring* ring);

HKKIT_API hkkit_status hkkit_residue_b(const hkkit_ring* ring, uint64_t e, uint64_t* out);
HKKIT_API hkkit_status hkkit_hk_value(const hkkit_ring* ring, uint64_t e, char* buf, size_t buf_size,
                                      size_t* out_len);
HKKIT_API hkkit_status hkkit_phi_value(const hkkit_ring* ring, uint64_t e, char* buf, size_t buf_size,
                                       size_t* out_len);

typedef struct hkkit_table hkkit_table;

typedef struct hkkit_row {
  uint64_t e;
  const char* q;
  uint64_t b;
  const char* hk;
  const char* phi;
} hkkit_row;

HKKIT_API hkkit_status hkkit_table_create(const hkkit_ring* ring, uint64_t e_max, hkkit_table** out);
HKKIT_API void hkkit_table_destroy(hkkit_table* table);
HKKIT_API size_t hkkit_table_size(const hkkit_table* table);
HKKIT_API hkkit_status hkkit_table_row(const hkkit_table* table, size_t index, hkkit_row* out);

/* ---- period ------------------------------------------------------------ */

typedef enum hkkit_branch { HKKIT_BRANCH_HALF = 0, HKKIT_BRANCH_FULL = 1 } hkkit_branch;

typedef struct hkkit_period hkkit_period;

HKKIT_API hkkit_status hkkit_period_create(const hkkit_ring* ring, hkkit_period** out);
HKKIT_API void hkkit_period_destroy(hkkit_period* period);
HKKIT_API uint64_t hkkit_period_omega(const hkkit_period* period);
HKKIT_API uint64_t hkkit_period_pi(const hkkit_period* period);
HKKIT_API hkkit_branch hkkit_period_branch(const hkkit_period* period);
HKKIT_API int hkkit_period_involution_tested(const hkkit_period* period);
HKKIT_API int hkkit_period_involution_holds(const hkkit_period* period);
HKKIT_API size_t hkkit_period_profile_size(const hkkit_period* period);
/* NULL when index is out of range. */
HKKIT_API const char* hkkit_period_profile_at(const hkkit_period* period, size_t index);

typedef struct hkkit_period_check {
  int ok;
  uint64_t pi;
  int has_violation; /* phi(e + pi) != phi(e) at e = violation_e */
  uint64_t violation_e;
  int has_smaller_period; /* a proper divisor of pi is also a period */
  uint64_t smaller_period;
  size_t rejected_divisors; /* proper divisors of pi shown not to be periods */
} hkkit_period_check;

HKKIT_API hkkit_status hkkit_verify_minimal_period(const hkkit_ring* ring, uint64_t window_multiplier,
                                                   hkkit_period_check* out);

/* ---- realization ------------------------------------------------------- */

typedef struct hkkit_realization hkkit_realization;
typedef struct hkkit_realization_list hkkit_realization_list;

/* Returns HKKIT_OK or HKKIT_ERR_NOT_FOUND; in both cases *out is a handle the
 * caller must destroy, carrying the search statistics. */
HKKIT_API hkkit_status hkkit_realize(uint64_t pi, uint64_t n_limit, uint64_t p_limit,
                                     hkkit_realization** out);
HKKIT_API void hkkit_realization_destroy(hkkit_realization* r);
HKKIT_API int hkkit_realization_found(const hkkit_realization* r);
HKKIT_API uint64_t hkkit_realization_target_pi(const hkkit_realization* r);
HKKIT_API uint64_t hkkit_realization_p(const hkkit_realization* r);
HKKIT_API uint64_t hkkit_realization_n(const hkkit_realization* r);
HKKIT_API uint64_t hkkit_realization_residue(const hkkit_realization* r);
HKKIT_API uint64_t hkkit_realization_n_candidates(const hkkit_realization* r);
HKKIT_API uint64_t hkkit_realization_p_candidates(const hkkit_realization* r);
/* Borrowed from r; NULL when nothing was found. */
HKKIT_API const hkkit_period* hkkit_realization_period(const hkkit_realization* r);

HKKIT_API hkkit_status hkkit_enumerate_realizations(uint64_t pi, uint64_t n_limit, uint64_t p_limit,
                                                    uint64_t max_results, hkkit_realization_list** out);
HKKIT_API void hkkit_realization_list_destroy(hkkit_realization_list* list);
HKKIT_API size_t hkkit_realization_list_size(const hkkit_realization_list* list);
/* Borrowed from list; NULL when index is out of range. */
HKKIT_API const hkkit_realization* hkkit_realization_list_at(const hkkit_realization_list* list,
                                                             size_t index);

/* ---- Groebner oracle --------------------------------------------------- */

typedef struct hkkit_gb hkkit_gb;

/* Reduced lex(x>y) basis of (x^q, y^q, x^n - y^n) over F_p, q = p^e <= q_cap. */
HKKIT_API hkkit_status hkkit_gb_frobenius(const hkkit_ring* ring, uint64_t e, uint64_t q_cap,
                                          hkkit_gb** out);
HKKIT_API void hkkit_gb_destroy(hkkit_gb* gb);
HKKIT_API size_t hkkit_gb_size(const hkkit_gb* gb);
HKKIT_API const char* hkkit_gb_generator(const hkkit_gb* gb, size_t index);
HKKIT_API size_t hkkit_gb_term_count(const hkkit_gb* gb, size_t index);
/* Terms in decreasing lex order; coeff in [1, p-1]. */
HKKIT_API hkkit_status hkkit_gb_term(const hkkit_gb* gb, size_t index, size_t term, uint64_t* x_exp,
                                     uint64_t* y_exp, uint64_t* coeff);
/* Leading monomial of generator index. */
HKKIT_API hkkit_status hkkit_gb_staircase(const hkkit_gb* gb, size_t index, uint64_t* x_exp,
                                          uint64_t* y_exp);
/* Standard monomial count as a decimal string, or NULL when infinite. */
HKKIT_API const char* hkkit_gb_standard_monomials(const hkkit_gb* gb);

HKKIT_API hkkit_status hkkit_hk_brute(const hkkit_ring* ring, uint64_t e, uint64_t q_cap, char* buf,
                                      size_t buf_size, size_t* out_len);

typedef struct hkkit_paper_gb_check {
  int ok;
  uint64_t q;
  uint64_t b;
  int telescoping;
  int s_pairs;
  int staircase;
} hkkit_paper_gb_check;

/* HKKIT_ERR_PRECONDITION when q <= n, HKKIT_ERR_CAP_EXCEEDED when q > q_cap. */
HKKIT_API hkkit_status hkkit_verify_paper_gb(const hkkit_ring* ring, uint64_t e, uint64_t q_cap,
                                             hkkit_paper_gb_check* out);

#ifdef __cplusplus
}
#endif

#endif /* HKKIT_H */
