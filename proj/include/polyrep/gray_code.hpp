#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "polyrep/prefix_matrix.hpp"
#include "polyrep/search_status.hpp"

namespace polyrep {

inline constexpr unsigned long long kDefaultGrayBudget = 5'000'000;

// Cyclic Gray code over n bits, stored as its transition sequence:
// transitions[t] is the bit (0-based) flipped between column t and t+1,
// with column 0 = 0 and column 2^n wrapping to column 0.
struct GrayCode {
  int n = 0;
  std::vector<int> transitions;

  bool operator==(const GrayCode& other) const = default;
};

// The 2^n columns as bitmasks, starting at 0.
std::vector<std::uint64_t> gray_columns(const GrayCode& code);

// Throws std::invalid_argument unless 1 <= n <= 16, the transition list
// has length 2^n with entries in [0, n), all columns are distinct, and
// the final transition returns to column 0.
void validate_gray(const GrayCode& code);

// Standard reflected binary code: column t = t ^ (t >> 1).
GrayCode reflected(int n);

// Cyclic run lengths per row; runs[r] lists the gaps between consecutive
// flips of bit r in positional order (wrap gap last). Row r+1 of the
// column matrix stays constant for exactly runs[r][i] steps.
struct RunProfile {
  std::vector<std::vector<int>> runs;
  int min_run = 0;
};

RunProfile run_profile(const GrayCode& code);

struct GraySearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<GrayCode> code;
  unsigned long long nodes = 0;
};

// Depth-first search over transition sequences for a code with every run
// length >= target. A bit may not flip again within target-1 steps of its
// last flip; first occurrences of bits are forced into increasing order
// (row-relabeling symmetry). Exhausted is a proof of nonexistence only
// when the budget was not hit.
GraySearchResult search_long_run(
    int n, int target, unsigned long long budget = kDefaultGrayBudget);

struct GrayEnumeration {
  std::vector<GrayCode> codes;
  bool complete = false;  // whole tree explored
  unsigned long long nodes = 0;
};

// Collects codes with min_run >= target in DFS order, up to max_codes.
// canonical=false disables the bit-relabeling symmetry breaking, so the
// enumeration sees every directed cycle through column 0 exactly once.
GrayEnumeration enumerate_long_run(int n, int target, std::size_t max_codes,
                                   unsigned long long budget,
                                   bool canonical);

// First m+1 columns as a PrefixMatrix; requires m+1 <= 2^n. Distinctness
// of the columns is inherited, so the result always satisfies the
// distinct-column condition.
PrefixMatrix prefix_matrix(const GrayCode& code, int m);

// One record per searched width: the best target for which the search
// succeeded under the recorded node budget, with a witness code.
struct GrayCatalogEntry {
  int n = 0;
  int best_min_run = 0;
  unsigned long long budget = 0;
  std::vector<int> transitions;
};

// Table frozen from this repository's own search runs (data/gray_catalog.json
// holds the same records).
const std::vector<GrayCatalogEntry>& builtin_gray_catalog();

// Throws std::out_of_range when n is outside the searched range.
int best_min_run(int n);
const GrayCatalogEntry& catalog_entry(int n);

// Reruns the searches that produce the catalog.
std::vector<GrayCatalogEntry> compute_gray_catalog(int max_n,
                                                   unsigned long long budget);

}  // namespace polyrep
