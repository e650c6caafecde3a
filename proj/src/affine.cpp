#include "polyrep/affine.hpp"

namespace polyrep {

std::optional<Point> line_intersection(const AffineForm& f,
                                       const AffineForm& g) {
  Scalar det = gradient_cross(f, g);
  if (det == 0) return std::nullopt;
  // Cramer on a1*x + a2*y = -b.
  Scalar x((-f.b) * g.a2 - f.a2 * (-g.b));
  Scalar y(f.a1 * (-g.b) - (-f.b) * g.a1);
  return Point{Scalar(x / det), Scalar(y / det)};
}

std::string format_form(const AffineForm& f) {
  return format_scalar(f.a1) + "*x1 + " + format_scalar(f.a2) + "*x2 + " +
         format_scalar(f.b);
}

}  // namespace polyrep
