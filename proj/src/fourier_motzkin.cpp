#include "polyrep/fourier_motzkin.hpp"

#include <cassert>

namespace polyrep {

std::optional<Scalar> feasible_value(const std::vector<ScalarConstraint>& cs) {
  bool has_lo = false, has_hi = false;
  bool lo_strict = false, hi_strict = false;
  Scalar lo, hi;
  for (const ScalarConstraint& c : cs) {
    if (c.coef == 0) {
      if (c.c < 0 || (c.strict && c.c == 0)) return std::nullopt;
      continue;
    }
    Scalar bound(-c.c / c.coef);
    if (c.coef > 0) {
      // t >= bound (or >).
      if (!has_lo || bound > lo || (bound == lo && c.strict)) {
        lo = bound;
        lo_strict = c.strict;
        has_lo = true;
      }
    } else {
      // t <= bound (or <).
      if (!has_hi || bound < hi || (bound == hi && c.strict)) {
        hi = bound;
        hi_strict = c.strict;
        has_hi = true;
      }
    }
  }
  if (!has_lo && !has_hi) return Scalar(0);
  if (!has_lo) return Scalar(hi - 1);
  if (!has_hi) return Scalar(lo + 1);
  if (lo > hi) return std::nullopt;
  if (lo == hi) {
    if (lo_strict || hi_strict) return std::nullopt;
    return lo;
  }
  return Scalar((lo + hi) / 2);
}

std::optional<Point> feasible_point(const std::vector<LinearConstraint>& cs) {
  // Eliminate x2. Rows with a2 == 0 pass through as one-variable rows;
  // every (lower, upper) bound pair on x2 combines into one row in x1.
  struct Bound {
    Scalar c1;  // x2 (>=|<=) c1*x1 + c0
    Scalar c0;
    bool strict;
  };
  std::vector<Bound> lowers, uppers;
  std::vector<ScalarConstraint> one_var;
  for (const LinearConstraint& c : cs) {
    if (c.a2 == 0) {
      one_var.push_back({c.a1, c.b, c.strict});
    } else {
      Bound b{Scalar(-c.a1 / c.a2), Scalar(-c.b / c.a2), c.strict};
      if (c.a2 > 0) {
        lowers.push_back(b);
      } else {
        uppers.push_back(b);
      }
    }
  }
  for (const Bound& lo : lowers) {
    for (const Bound& up : uppers) {
      one_var.push_back({Scalar(up.c1 - lo.c1), Scalar(up.c0 - lo.c0),
                         lo.strict || up.strict});
    }
  }
  std::optional<Scalar> x1 = feasible_value(one_var);
  if (!x1) return std::nullopt;

  std::vector<ScalarConstraint> x2_rows;
  for (const LinearConstraint& c : cs) {
    if (c.a2 == 0) continue;
    x2_rows.push_back({c.a2, Scalar(c.a1 * *x1 + c.b), c.strict});
  }
  std::optional<Scalar> x2 = feasible_value(x2_rows);
  if (!x2) return std::nullopt;  // unreachable once x1 admissible

  Point p{*x1, *x2};
  for (const LinearConstraint& c : cs) {
    Scalar v(c.a1 * p.x + c.a2 * p.y + c.b);
    assert(c.strict ? v > 0 : v >= 0);
    (void)v;
  }
  return p;
}

}  // namespace polyrep
