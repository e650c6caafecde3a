#pragma once

#include <vector>

#include "polyrep/polygon.hpp"

namespace polyrep {

enum class Membership { Interior, Boundary, Exterior };

struct SamplePoint {
  Point p;
  Membership tag = Membership::Interior;
};

// Exact membership from edge signs: any negative form value is Exterior,
// otherwise any zero is Boundary.
Membership classify(const Polygon& P, const Point& x);

// Deterministic structured witness set: the interior point; per edge a
// relative-interior point with inward/outward offsets at unit and eps
// scale; per vertex eight unit-scale and eight eps-scale perturbations;
// all pairwise edge-line intersections with four diagonal perturbations;
// far points on a circle of rational directions; a grid over the padded
// vertex bounding box. Tags are computed exactly, duplicates removed
// keeping first occurrence. Always 1000+ points.
std::vector<SamplePoint> sample_witnesses(const Polygon& P);

const char* membership_name(Membership tag);

}  // namespace polyrep
