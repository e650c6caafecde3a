#pragma once

#include <optional>
#include <string>

#include "polyrep/rational.hpp"

namespace polyrep {

// Affine function f(x) = a1*x1 + a2*x2 + b with (a1, a2) != (0, 0).
struct AffineForm {
  Scalar a1;
  Scalar a2;
  Scalar b;

  Scalar eval(const Point& p) const { return Scalar(a1 * p.x + a2 * p.y + b); }

  bool operator==(const AffineForm& other) const = default;
};

inline AffineForm negated(const AffineForm& f) {
  return {Scalar(-f.a1), Scalar(-f.a2), Scalar(-f.b)};
}

// Determinant of the gradient pair; zero iff the zero lines are parallel.
inline Scalar gradient_cross(const AffineForm& f, const AffineForm& g) {
  return Scalar(f.a1 * g.a2 - f.a2 * g.a1);
}

// Unique intersection of the two zero lines, or nullopt when parallel.
std::optional<Point> line_intersection(const AffineForm& f,
                                       const AffineForm& g);

std::string format_form(const AffineForm& f);

}  // namespace polyrep
