#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "polyrep/gray_code.hpp"

using namespace polyrep;

TEST_CASE("reflected codes match the textbook sequences") {
  CHECK(gray_columns(reflected(1)) == std::vector<std::uint64_t>{0, 1});
  CHECK(gray_columns(reflected(2)) == std::vector<std::uint64_t>{0, 1, 3, 2});
  CHECK(gray_columns(reflected(3)) ==
        std::vector<std::uint64_t>{0, 1, 3, 2, 6, 7, 5, 4});
  for (int n = 1; n <= 10; ++n) CHECK_NOTHROW(validate_gray(reflected(n)));
}

TEST_CASE("validate_gray rejects broken transition lists") {
  CHECK_THROWS_AS(validate_gray(GrayCode{0, {}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_gray(GrayCode{1, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_gray(GrayCode{2, {0, 1, 0, 2}}),
                  std::invalid_argument);
  // Closes but revisits column 0 midway.
  CHECK_THROWS_AS(validate_gray(GrayCode{2, {0, 0, 1, 1}}),
                  std::invalid_argument);
  // Never returns to 0.
  CHECK_THROWS_AS(validate_gray(GrayCode{2, {0, 1, 0, 1, 0, 1, 0, 0}}),
                  std::invalid_argument);
}

TEST_CASE("run_profile sums to the cycle length in every row") {
  for (int n = 1; n <= 8; ++n) {
    RunProfile prof = run_profile(reflected(n));
    REQUIRE(prof.runs.size() == static_cast<std::size_t>(n));
    for (const std::vector<int>& gaps : prof.runs) {
      CHECK(std::accumulate(gaps.begin(), gaps.end(), 0) == 1 << n);
    }
    CHECK(prof.min_run >= 1);
  }
  CHECK(run_profile(reflected(1)).min_run == 1);
  CHECK(run_profile(reflected(2)).min_run == 2);
  CHECK(run_profile(reflected(3)).min_run == 2);
  // Bit 0 of the reflected code flips every other step.
  CHECK(run_profile(reflected(6)).min_run == 2);
}

TEST_CASE("enumeration counts directed hypercube Hamiltonian cycles") {
  // From a fixed start: Q1 has 1, Q2 has 2 (one cycle, two directions),
  // Q3 has 12 (6 cycles), Q4 has 2688 (1344 cycles).
  const std::size_t expected[] = {1, 2, 12, 2688};
  for (int n = 1; n <= 4; ++n) {
    GrayEnumeration e =
        enumerate_long_run(n, 1, 1 << 30, 200'000'000ull, false);
    REQUIRE(e.complete);
    CHECK(e.codes.size() == expected[n - 1]);
    for (std::size_t i = 0; i < e.codes.size(); i += 97) {
      CHECK_NOTHROW(validate_gray(e.codes[i]));
    }
  }
}

TEST_CASE("canonical enumeration keeps one code per bit relabeling") {
  GrayEnumeration all = enumerate_long_run(3, 1, 1 << 30, 10'000'000ull, false);
  GrayEnumeration canon = enumerate_long_run(3, 1, 1 << 30, 10'000'000ull, true);
  REQUIRE(all.complete);
  REQUIRE(canon.complete);
  // 12 directed cycles fall into orbits under the 3! bit relabelings.
  CHECK(canon.codes.size() * 6 == all.codes.size());
  for (const GrayCode& code : canon.codes) {
    // First occurrences of bits appear in increasing order.
    int seen = 0;
    for (int t : code.transitions) {
      if (t == seen) ++seen;
      CHECK(t < seen);
    }
    CHECK(seen == code.n);
  }
}

TEST_CASE("long-run search finds and refutes correctly at small sizes") {
  GraySearchResult r2 = search_long_run(2, 2);
  REQUIRE(r2.status == SearchStatus::Found);
  CHECK(run_profile(*r2.code).min_run >= 2);

  GraySearchResult r1 = search_long_run(1, 2);
  CHECK(r1.status == SearchStatus::Exhausted);

  // No 3-bit code has min run 3: some bit flips 4 times but 3*4 > 8.
  GraySearchResult r3 = search_long_run(3, 3);
  CHECK(r3.status == SearchStatus::Exhausted);

  GraySearchResult r5 = search_long_run(5, 4);
  REQUIRE(r5.status == SearchStatus::Found);
  CHECK(run_profile(*r5.code).min_run >= 4);
}

TEST_CASE("found codes are canonical and satisfy the target") {
  for (auto [n, target] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 4}}) {
    GraySearchResult r = search_long_run(n, target, 50'000'000ull);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK_NOTHROW(validate_gray(*r.code));
    CHECK(run_profile(*r.code).min_run >= target);
    CHECK(r.code->transitions[0] == 0);
  }
}

TEST_CASE("every truncated prefix satisfies the neighbor-pair condition") {
  // Reflected codes first.
  for (int n = 1; n <= 4; ++n) {
    GrayCode code = reflected(n);
    for (int m = 0; m + 1 <= (1 << n); ++m) {
      PrefixMatrix M = prefix_matrix(code, m);
      CAPTURE(n);
      CAPTURE(m);
      CHECK(check_I_prime(M));
      CHECK(check_J_prime(M));
    }
  }
  // A searched long-run code, all truncations.
  GraySearchResult r = search_long_run(6, 4, 50'000'000ull);
  REQUIRE(r.status == SearchStatus::Found);
  for (int m = 0; m + 1 <= 64; ++m) {
    CHECK(check_J_prime(prefix_matrix(*r.code, m)));
  }
}

TEST_CASE("prefix_matrix rejects truncations past the cycle") {
  GrayCode code = reflected(2);
  CHECK_NOTHROW(prefix_matrix(code, 3));
  CHECK_THROWS_AS(prefix_matrix(code, 4), std::invalid_argument);
  PrefixMatrix M = prefix_matrix(code, 2);
  CHECK(M.n == 2);
  CHECK(M.m == 2);
  CHECK(M.cols == std::vector<std::uint64_t>{0, 1, 3});
}

TEST_CASE("catalog entries are genuine codes achieving their run length") {
  const std::vector<GrayCatalogEntry>& table = builtin_gray_catalog();
  REQUIRE(!table.empty());
  for (const GrayCatalogEntry& e : table) {
    GrayCode code{e.n, e.transitions};
    CHECK_NOTHROW(validate_gray(code));
    CHECK(run_profile(code).min_run == e.best_min_run);
    CHECK(best_min_run(e.n) == e.best_min_run);
    CHECK(catalog_entry(e.n).n == e.n);
  }
  CHECK_THROWS_AS(best_min_run(99), std::out_of_range);
  CHECK_THROWS_AS(catalog_entry(0), std::out_of_range);
}

TEST_CASE("catalog recomputation reproduces the small widths") {
  std::vector<GrayCatalogEntry> fresh = compute_gray_catalog(4, 2'000'000ull);
  REQUIRE(fresh.size() == 4);
  CHECK(fresh[0].best_min_run == 1);
  CHECK(fresh[1].best_min_run == 2);
  CHECK(fresh[2].best_min_run == 2);
  CHECK(fresh[3].best_min_run == 2);
  for (const GrayCatalogEntry& e : fresh) {
    CHECK(run_profile(GrayCode{e.n, e.transitions}).min_run == e.best_min_run);
  }
}
