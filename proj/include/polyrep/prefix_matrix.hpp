#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyrep/set_family.hpp"

namespace polyrep {

// Binary n x (m+1) matrix stored column-wise; bit r of cols[j] is the
// entry of row r+1 in column j. Column 0 is all-zero. Columns -1 and m+1
// are read as copies of columns 0 and m by convention.
// At most 64 rows (the bitmask fast path; nothing here needs more).
struct PrefixMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::uint64_t> cols;  // size m+1

  std::uint64_t row_mask() const {
    return n == 64 ? ~0ull : (1ull << n) - 1;
  }

  bool operator==(const PrefixMatrix& other) const = default;
};

// Throws std::invalid_argument if sizes disagree, n > 64, column 0 is
// nonzero, or stray bits are set above row n.
void validate_prefix(const PrefixMatrix& M);

// Column j holds the parities of |S_i ∩ {1..j}|. Multiset members reduce
// mod 2. Requires a valid family with n <= 64 members.
PrefixMatrix to_prefix(const SetFamily& fam);

// S_i = { j : column j-1 and column j differ in row i }. Inverse of
// to_prefix on squarefree families. Constant rows yield empty members,
// which are kept (round-trip identity).
SetFamily from_prefix(const PrefixMatrix& M);

// Pairwise-distinct columns. Returns a violating column pair (a < b,
// both in 0..m) or nullopt.
std::optional<std::pair<int, int>> check_I_prime_pair(const PrefixMatrix& M);
bool check_I_prime(const PrefixMatrix& M);

// For every 0 <= a < b <= m some row i has
//   M_{i,a-1} = M_{i,a} != M_{i,b} = M_{i,b+1}
// under the boundary convention above. Returns a violating pair (a, b).
std::optional<std::pair<int, int>> check_J_prime_pair(const PrefixMatrix& M);
bool check_J_prime(const PrefixMatrix& M);

// Every row has at most k bit changes across columns 0..m. Returns the
// first offending row (1-based).
std::optional<int> check_K_prime_row(const PrefixMatrix& M, int k);
bool check_K_prime(const PrefixMatrix& M, int k);

int row_changes(const PrefixMatrix& M, int row);  // row is 1-based

// Rows as 0/1 strings of length m+1, row 1 first.
std::vector<std::string> prefix_rows(const PrefixMatrix& M);
PrefixMatrix prefix_from_rows(const std::vector<std::string>& rows);

}  // namespace polyrep
