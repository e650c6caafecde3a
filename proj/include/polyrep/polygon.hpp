#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "polyrep/affine.hpp"

namespace polyrep {

enum class PolygonKind { Bounded, CanonicalUnbounded };

enum class PolygonErrorKind {
  InvalidForm,
  EmptyInterior,
  RedundantHalfplane,
  NotConsecutiveOrder,
  ParallelUnboundedEdges,
  UnboundedButMarkedBounded,
  BoundedButMarkedUnbounded,
  InfeasibleWitness,
};

class PolygonError : public std::runtime_error {
 public:
  PolygonError(PolygonErrorKind kind, int index, const std::string& message)
      : std::runtime_error(message), kind_(kind), index_(index) {}

  PolygonErrorKind kind() const { return kind_; }
  // 1-based input position of the offending form; 0 when not form-specific.
  int index() const { return index_; }

 private:
  PolygonErrorKind kind_;
  int index_;
};

// Validated convex polygon with nonempty interior, held as edge forms in
// consecutive boundary order, each non-negative on the polygon.
//
// Edge indexing follows the family ground set:
//   CanonicalUnbounded: stored forms are edges 1..m (m = edge_count).
//   Bounded: stored forms are edges 0..m (edge 0 = first input form, the
//   designated extra edge; m = edge_count - 1).
class Polygon {
 public:
  PolygonKind kind() const { return kind_; }
  int edge_count() const { return static_cast<int>(forms_.size()); }

  // Ground-set size m of the associated set families.
  int ground_m() const {
    return kind_ == PolygonKind::Bounded ? edge_count() - 1 : edge_count();
  }

  int min_edge_index() const {
    return kind_ == PolygonKind::Bounded ? 0 : 1;
  }

  const std::vector<AffineForm>& forms() const { return forms_; }

  // Edge form by its family ground index.
  const AffineForm& form_at(int index) const;

  // Vertices between consecutive edges: bounded polygons have edge_count
  // vertices (cyclic), unbounded ones edge_count - 1.
  const std::vector<Point>& vertices() const { return vertices_; }

  const Point& interior_point() const { return interior_; }

 private:
  friend Polygon make_polygon(std::vector<AffineForm> forms,
                              PolygonKind kind);
  Polygon() = default;

  PolygonKind kind_ = PolygonKind::Bounded;
  std::vector<AffineForm> forms_;
  std::vector<Point> vertices_;
  Point interior_;
};

// Validates and canonicalizes an edge-form list given in consecutive
// boundary order. If the forms are jointly infeasible as given, signs are
// re-inferred from the vertex tour; a feasible as-given reading is kept
// unchanged. Throws PolygonError on every defect (see PolygonErrorKind).
Polygon make_polygon(std::vector<AffineForm> forms, PolygonKind kind);

// Exact sign classification of x against every edge, by ground index.
struct IlluminationSets {
  std::vector<int> lt;  // edges with form value < 0 at x, ascending
  std::vector<int> eq;  // edges with form value = 0 at x, ascending
};

IlluminationSets illuminated(const Polygon& P, const Point& x);

// A point whose illuminated set is exactly {a..b}: form values < 0 on the
// interval and > 0 elsewhere. Canonical unbounded polygons only; throws
// PolygonError(InfeasibleWitness) if no such point exists, which a valid
// polygon never triggers.
Point interval_witness(const Polygon& P, int a, int b);

}  // namespace polyrep
