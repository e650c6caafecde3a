#pragma once

#include <vector>

#include "polyrep/product.hpp"
#include "polyrep/rational.hpp"
#include "polyrep/set_family.hpp"

namespace polyrep {

inline constexpr unsigned long long kDefaultConstructBudget = 50'000;

// Smallest t >= 0 with 2^t >= x (x >= 1).
int ceil_log2(long long x);

// max(ceil(m/k), ceil(log2(m+1))): no valid family of width below this.
int lower_bound_n(int m, int k);

// A family passing the neighbor-interval condition and the cardinality
// budget k, of small (not always minimal) size. Widths are tried in
// ascending order: first prefixes of cataloged long-run codes and the
// reflected code when their per-row changes fit k, then a budgeted
// matrix search, finally the singleton staircase at width m, which
// always succeeds. Total function for m >= 0, k >= 1.
SetFamily construct_family(int m, int k,
                           unsigned long long budget = kDefaultConstructBudget);

struct BoundsReport {
  int m = 0;
  int k = 0;
  int lower_n = 0;     // max(ceil(m/k), ceil(log2(m+1)))
  int achieved_n = 0;  // size of the constructed family
  // Bracket for the minimal closed-polygon representation size of an
  // (m+1)-edge bounded polygon: [lower_n, 1 + achieved for ground m-1].
  int sandwich_lo = 0;
  int sandwich_hi = 0;
  Scalar s_ratio;        // m/k, exact
  double s_log2_m = 0;   // log2(m)
  double s_value = 0;    // max(m/k, log2 m)
};

BoundsReport theoretical_bounds(
    int m, int k, unsigned long long budget = kDefaultConstructBudget);

struct BoundsRow {
  int m = 0;
  int k = 0;
  int lower = 0;
  int achieved = 0;
};

// Rows in (m, k) lexicographic order. Within each m the k values sweep
// upward and a family is carried over whenever the fresh construction is
// not smaller, so achieved is nonincreasing in k.
std::vector<BoundsRow> bounds_table(
    int m_lo, int m_hi, int k_lo, int k_hi,
    unsigned long long budget = kDefaultConstructBudget);

// Product representation of the polygon in the requested mode: the
// constructed family over ground edges, plus the singleton member {0}
// for bounded polygons. One family serves both modes.
ProductRep construct_representation(
    const Polygon& P, int k, RepMode mode,
    unsigned long long budget = kDefaultConstructBudget);

}  // namespace polyrep
