#pragma once

#include <optional>

#include "polyrep/prefix_matrix.hpp"
#include "polyrep/search_status.hpp"

namespace polyrep {

// Which interval condition the matrix must satisfy besides the per-row
// bit-change budget: distinct columns only, or the full neighbor-aware
// condition (which implies distinctness).
enum class MatrixCond { Distinct, Neighbor };

struct MatrixSearchOptions {
  int m = 1;
  int k = 1;
  int n = 1;
  MatrixCond cond = MatrixCond::Neighbor;
  unsigned long long budget = 1'000'000;  // column placements
  // Restrict column steps to single bit flips. Incomplete in general but
  // sound, and every single-flip path satisfies the neighbor condition.
  bool single_flip_only = false;
};

struct MatrixSearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<PrefixMatrix> matrix;
  unsigned long long nodes = 0;
};

// Depth-first search over columns 1..m (column 0 fixed to zero) for an
// n x (m+1) matrix satisfying the requested conditions with at most k
// bit changes per row. Deterministic: column deltas are tried in
// (popcount, value) order; adjacent equal row prefixes are kept
// lexicographically nonincreasing to break the row-permutation symmetry.
// Exhausted proves nonexistence (over the restricted step set when
// single_flip_only) only when the budget was not hit.
MatrixSearchResult search_prefix_matrix(const MatrixSearchOptions& opt);

}  // namespace polyrep
