#include "hkkit/hkkit.h"

#include <doctest.h>

#include <string>

namespace {

std::string hk_string(const hkkit_ring* ring, std::uint64_t e) {
  std::size_t len = 0;
  REQUIRE(hkkit_hk_value(ring, e, nullptr, 0, &len) == HKKIT_ERR_BUFFER_TOO_SMALL);
  std::string out(len + 1, '\0');
  REQUIRE(hkkit_hk_value(ring, e, out.data(), out.size(), &len) == HKKIT_OK);
  out.resize(len);
  return out;
}

}  // namespace

TEST_CASE("number theory entry points") {
  std::uint64_t out = 0;
  CHECK(hkkit_mod_pow(13, 2, 15, &out) == HKKIT_OK);
  CHECK(out == 4);
  CHECK(hkkit_mod_pow(2, 2, 1, &out) == HKKIT_ERR_INVALID_MODULUS);
  CHECK(std::string(hkkit_last_error_message()).find("modulus") != std::string::npos);
  CHECK(hkkit_multiplicative_order(2, 7, &out) == HKKIT_OK);
  CHECK(out == 3);
  CHECK(hkkit_multiplicative_order(3, 9, &out) == HKKIT_ERR_NOT_A_UNIT);
  CHECK(hkkit_is_prime(561) == 0);
  CHECK(hkkit_is_prime(2) == 1);
  CHECK(hkkit_find_prime_in_class(1, 4, 100, &out) == HKKIT_OK);
  CHECK(out == 5);
  CHECK(hkkit_find_prime_in_class(2, 4, 100, &out) == HKKIT_ERR_NO_PRIMES_POSSIBLE);
  CHECK(hkkit_find_prime_in_class(1, 100, 100, &out) == HKKIT_ERR_NOT_FOUND);
  CHECK(hkkit_mod_pow(1, 1, 5, nullptr) == HKKIT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hkkit_status_name(HKKIT_ERR_CAP_EXCEEDED)) == "q cap exceeded");
}

TEST_CASE("ring lifecycle and closed form") {
  hkkit_ring* ring = nullptr;
  CHECK(hkkit_ring_create(2, 4, &ring) == HKKIT_ERR_INVALID_SPEC);
  CHECK(ring == nullptr);
  CHECK(std::string(hkkit_last_error_message()).find("p divides n") != std::string::npos);

  REQUIRE(hkkit_ring_create(2, 5, &ring) == HKKIT_OK);
  CHECK(hkkit_ring_p(ring) == 2);
  CHECK(hkkit_ring_n(ring) == 5);
  CHECK(hkkit_ring_hk_multiplicity(ring) == 5);
  std::uint64_t b = 0;
  CHECK(hkkit_residue_b(ring, 3, &b) == HKKIT_OK);
  CHECK(b == 3);
  CHECK(hk_string(ring, 3) == "34");
  // 5 * 2^100 - 4
  CHECK(hk_string(ring, 100) == "6338253001141147007483516026876");

  char small[2];
  std::size_t len = 0;
  CHECK(hkkit_hk_value(ring, 3, small, sizeof small, &len) == HKKIT_ERR_BUFFER_TOO_SMALL);
  CHECK(len == 2);
  char buf[8];
  CHECK(hkkit_phi_value(ring, 1, buf, sizeof buf, &len) == HKKIT_OK);
  CHECK(std::string(buf) == "6");

  hkkit_table* table = nullptr;
  REQUIRE(hkkit_table_create(ring, 3, &table) == HKKIT_OK);
  REQUIRE(hkkit_table_size(table) == 4);
  hkkit_row row{};
  CHECK(hkkit_table_row(table, 3, &row) == HKKIT_OK);
  CHECK(row.e == 3);
  CHECK(std::string(row.q) == "8");
  CHECK(row.b == 3);
  CHECK(std::string(row.hk) == "34");
  CHECK(std::string(row.phi) == "6");
  CHECK(hkkit_table_row(table, 4, &row) == HKKIT_ERR_INVALID_ARGUMENT);
  hkkit_table_destroy(table);

  hkkit_ring_destroy(ring);
  hkkit_ring_destroy(nullptr);
}

TEST_CASE("period handles") {
  hkkit_ring* ring = nullptr;
  REQUIRE(hkkit_ring_create(2, 15, &ring) == HKKIT_OK);
  hkkit_period* period = nullptr;
  REQUIRE(hkkit_period_create(ring, &period) == HKKIT_OK);
  CHECK(hkkit_period_omega(period) == 4);
  CHECK(hkkit_period_pi(period) == 4);
  CHECK(hkkit_period_branch(period) == HKKIT_BRANCH_FULL);
  CHECK(hkkit_period_involution_tested(period) == 1);
  CHECK(hkkit_period_involution_holds(period) == 0);
  REQUIRE(hkkit_period_profile_size(period) == 4);
  CHECK(std::string(hkkit_period_profile_at(period, 3)) == "56");
  CHECK(hkkit_period_profile_at(period, 4) == nullptr);
  hkkit_period_destroy(period);

  hkkit_period_check check{};
  CHECK(hkkit_verify_minimal_period(ring, 4, &check) == HKKIT_OK);
  CHECK(check.ok == 1);
  CHECK(check.pi == 4);
  CHECK(check.rejected_divisors == 2);
  CHECK(hkkit_verify_minimal_period(ring, 1, &check) == HKKIT_ERR_INVALID_ARGUMENT);
  hkkit_ring_destroy(ring);
}

TEST_CASE("realization handles") {
  hkkit_realization* r = nullptr;
  REQUIRE(hkkit_realize(3, 1000, 1000, &r) == HKKIT_OK);
  CHECK(hkkit_realization_found(r) == 1);
  CHECK(hkkit_realization_target_pi(r) == 3);
  CHECK(hkkit_realization_p(r) == 3);
  CHECK(hkkit_realization_n(r) == 7);
  CHECK(hkkit_realization_residue(r) == 3);
  const hkkit_period* period = hkkit_realization_period(r);
  REQUIRE(period != nullptr);
  CHECK(hkkit_period_pi(period) == 3);
  CHECK(hkkit_period_branch(period) == HKKIT_BRANCH_HALF);
  hkkit_realization_destroy(r);

  r = nullptr;
  CHECK(hkkit_realize(7, 3, 10000, &r) == HKKIT_ERR_NOT_FOUND);
  REQUIRE(r != nullptr);
  CHECK(hkkit_realization_found(r) == 0);
  CHECK(hkkit_realization_period(r) == nullptr);
  CHECK(hkkit_realization_n_candidates(r) == 0);
  hkkit_realization_destroy(r);

  r = nullptr;
  CHECK(hkkit_realize(0, 100, 100, &r) == HKKIT_ERR_INVALID_ARGUMENT);
  CHECK(r == nullptr);

  hkkit_realization_list* list = nullptr;
  REQUIRE(hkkit_enumerate_realizations(4, 20, 20, 5, &list) == HKKIT_OK);
  REQUIRE(hkkit_realization_list_size(list) == 5);
  const hkkit_realization* first = hkkit_realization_list_at(list, 0);
  CHECK(hkkit_realization_n(first) == 15);
  CHECK(hkkit_realization_p(first) == 2);
  CHECK(hkkit_period_branch(hkkit_realization_period(first)) == HKKIT_BRANCH_FULL);
  CHECK(hkkit_realization_list_at(list, 5) == nullptr);
  hkkit_realization_list_destroy(list);
}

TEST_CASE("groebner handles") {
  hkkit_ring* ring = nullptr;
  REQUIRE(hkkit_ring_create(2, 3, &ring) == HKKIT_OK);
  hkkit_gb* gb = nullptr;
  REQUIRE(hkkit_gb_frobenius(ring, 2, 512, &gb) == HKKIT_OK);
  REQUIRE(hkkit_gb_size(gb) == 3);
  CHECK(std::string(hkkit_gb_generator(gb, 0)) == "x^3 + y^3");
  CHECK(std::string(hkkit_gb_generator(gb, 1)) == "x*y^3");
  CHECK(hkkit_gb_term_count(gb, 0) == 2);
  std::uint64_t i = 0, j = 0, c = 0;
  CHECK(hkkit_gb_term(gb, 0, 1, &i, &j, &c) == HKKIT_OK);
  CHECK((i == 0 && j == 3 && c == 1));
  CHECK(hkkit_gb_staircase(gb, 1, &i, &j) == HKKIT_OK);
  CHECK((i == 1 && j == 3));
  CHECK(hkkit_gb_staircase(gb, 3, &i, &j) == HKKIT_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hkkit_gb_standard_monomials(gb)) == "10");
  hkkit_gb_destroy(gb);

  gb = nullptr;
  CHECK(hkkit_gb_frobenius(ring, 10, 512, &gb) == HKKIT_ERR_CAP_EXCEEDED);
  CHECK(gb == nullptr);

  char buf[16];
  std::size_t len = 0;
  CHECK(hkkit_hk_brute(ring, 2, 512, buf, sizeof buf, &len) == HKKIT_OK);
  CHECK(std::string(buf) == "10");

  hkkit_paper_gb_check check{};
  CHECK(hkkit_verify_paper_gb(ring, 1, 512, &check) == HKKIT_ERR_PRECONDITION);
  CHECK(hkkit_verify_paper_gb(ring, 2, 512, &check) == HKKIT_OK);
  CHECK(check.ok == 1);
  CHECK(check.q == 4);
  CHECK(check.b == 1);
  CHECK((check.telescoping && check.s_pairs && check.staircase));
  hkkit_ring_destroy(ring);
}
