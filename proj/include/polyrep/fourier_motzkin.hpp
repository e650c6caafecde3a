#pragma once

#include <optional>
#include <vector>

#include "polyrep/rational.hpp"

namespace polyrep {

// a1*x1 + a2*x2 + b >= 0, or > 0 when strict.
struct LinearConstraint {
  Scalar a1;
  Scalar a2;
  Scalar b;
  bool strict = false;
};

// coef*t + c >= 0, or > 0 when strict.
struct ScalarConstraint {
  Scalar coef;
  Scalar c;
  bool strict = false;
};

// Solves a one-variable system exactly. Picks the midpoint of the admissible
// interval, or bound +/- 1 when the interval is a ray, or 0 when free.
std::optional<Scalar> feasible_value(const std::vector<ScalarConstraint>& cs);

// Exact two-variable Fourier-Motzkin with mixed strict/non-strict rows.
// x2 is eliminated first; each variable is then chosen by the interval rule
// of feasible_value. The returned point satisfies every constraint exactly.
std::optional<Point> feasible_point(const std::vector<LinearConstraint>& cs);

}  // namespace polyrep
