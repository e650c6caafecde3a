#pragma once

#include <optional>
#include <vector>

#include "polyrep/search_status.hpp"
#include "polyrep/set_family.hpp"

namespace polyrep {

enum class ExactMode {
  Open,    // distinct prefix columns (strict-interval condition)
  Closed,  // neighbor-interval condition
};

struct SearchStats {
  unsigned long long nodes = 0;
  double seconds = 0.0;
};

struct ExactResult {
  int m = 0;
  int k = 0;
  ExactMode mode = ExactMode::Open;
  int n_min = 0;
  SetFamily witness;  // passes the mode's check and the cardinality budget
  SearchStats stats;
};

struct ExactOutcome {
  SearchStatus status = SearchStatus::Found;
  std::optional<ExactResult> result;  // set iff status == Found
  // On BudgetExceeded: n_min lies in [lo, hi]; all widths below lo are
  // exhausted, hi is the singleton-staircase fallback width m.
  int lo = 0;
  int hi = 0;
  unsigned long long nodes = 0;
};

inline constexpr unsigned long long kDefaultExactBudget = 20'000'000;

// Minimal family size for ground set size m and cardinality budget k,
// by exhaustive matrix search of ascending widths starting at the
// theoretical lower bound. Deterministic; never returns Exhausted
// (width m always admits the staircase).
ExactOutcome exact_n(int m, int k, ExactMode mode,
                     unsigned long long budget = kDefaultExactBudget);

// Independent cross-check: enumerates families directly as combinations
// of the <= 2^m - 1 candidate members of size <= k, testing each with the
// literal interval scans. No shared machinery with exact_n beyond the
// family container. m <= 7 only.
int brute_oracle(int m, int k, ExactMode mode);

struct ExactCacheEntry {
  int m = 0;
  int k = 0;
  ExactMode mode = ExactMode::Open;
  int n_min = 0;
  unsigned long long nodes = 0;
};

// Linear scan; cache files stay small.
std::optional<ExactCacheEntry> cache_lookup(
    const std::vector<ExactCacheEntry>& cache, int m, int k, ExactMode mode);

// Inserts or overwrites the (m, k, mode) cell.
void cache_store(std::vector<ExactCacheEntry>& cache, const ExactCacheEntry& e);

}  // namespace polyrep
