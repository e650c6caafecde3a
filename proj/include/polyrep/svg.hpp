#pragma once

#include <array>
#include <optional>
#include <string>

#include "polyrep/polygon.hpp"
#include "polyrep/product.hpp"

namespace polyrep {

struct PlotOptions {
  int grid = 256;    // shading cells per axis
  int width = 640;   // pixels
  int height = 640;  // pixels
  // x0, y0, x1, y1. Default: bounding box of vertices and interior point,
  // padded by a quarter of its larger extent on every side.
  std::optional<std::array<Scalar, 4>> window;
};

// Deterministic SVG diagnostic: cells whose center makes every member
// product strictly positive are shaded (exact rational evaluation), the
// polygon boundary is drawn solid, and the zero-line of every factor used
// by the representation is drawn dashed.
std::string render_svg(const Polygon& P, const ProductRep& rep,
                       const PlotOptions& opt = {});

}  // namespace polyrep
