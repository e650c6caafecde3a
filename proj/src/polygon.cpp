#include "polyrep/polygon.hpp"

#include <algorithm>

#include "polyrep/fourier_motzkin.hpp"

namespace polyrep {

namespace {

std::optional<Point> strict_interior(const std::vector<AffineForm>& forms) {
  std::vector<LinearConstraint> cs;
  cs.reserve(forms.size());
  for (const AffineForm& f : forms) {
    cs.push_back({f.a1, f.a2, f.b, true});
  }
  return feasible_point(cs);
}

// Intersections of consecutive edge lines; sign-independent. Bounded mode
// wraps around. Throws NotConsecutiveOrder on a parallel consecutive pair.
std::vector<Point> tour_vertices(const std::vector<AffineForm>& forms,
                                 PolygonKind kind) {
  std::vector<Point> verts;
  std::size_t pairs = kind == PolygonKind::Bounded && forms.size() >= 2
                          ? forms.size()
                          : forms.size() - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    std::size_t j = (i + 1) % forms.size();
    std::optional<Point> v = line_intersection(forms[i], forms[j]);
    if (!v) {
      throw PolygonError(
          PolygonErrorKind::NotConsecutiveOrder, static_cast<int>(i) + 1,
          "consecutive edges " + std::to_string(i + 1) + " and " +
              std::to_string(j + 1) + " are parallel");
    }
    verts.push_back(*v);
  }
  return verts;
}

// Direction classification of the recession cone {d : grad_i . d >= 0}.
bool recession_nonzero(const std::vector<AffineForm>& forms) {
  for (Scalar dy : {Scalar(1), Scalar(-1)}) {
    bool ok = true;
    for (const AffineForm& f : forms) {
      if (f.a2 * dy < 0) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  for (Scalar dx : {Scalar(1), Scalar(-1)}) {
    std::vector<ScalarConstraint> cs;
    cs.reserve(forms.size());
    for (const AffineForm& f : forms) {
      cs.push_back({f.a2, Scalar(f.a1 * dx), false});
    }
    if (feasible_value(cs)) return true;
  }
  return false;
}

bool recession_full_dim(const std::vector<AffineForm>& forms) {
  // The open cone {d : grad_i . d > 0}, if nonempty, contains directions
  // with nonzero first coordinate, so two one-variable systems suffice.
  for (Scalar dx : {Scalar(1), Scalar(-1)}) {
    std::vector<ScalarConstraint> cs;
    cs.reserve(forms.size());
    for (const AffineForm& f : forms) {
      cs.push_back({f.a2, Scalar(f.a1 * dx), true});
    }
    if (feasible_value(cs)) return true;
  }
  return false;
}

}  // namespace

const AffineForm& Polygon::form_at(int index) const {
  int lo = min_edge_index();
  if (index < lo || index > ground_m()) {
    throw std::out_of_range("polygon edge index " + std::to_string(index) +
                            " outside " + std::to_string(lo) + ".." +
                            std::to_string(ground_m()));
  }
  return forms_[kind_ == PolygonKind::Bounded ? index : index - 1];
}

Polygon make_polygon(std::vector<AffineForm> forms, PolygonKind kind) {
  if (forms.empty()) {
    throw PolygonError(PolygonErrorKind::InvalidForm, 0, "no edge forms");
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].a1 == 0 && forms[i].a2 == 0) {
      throw PolygonError(PolygonErrorKind::InvalidForm,
                         static_cast<int>(i) + 1,
                         "edge form with zero gradient");
    }
  }

  std::vector<Point> verts;
  if (forms.size() >= 2) verts = tour_vertices(forms, kind);

  // Orientation: a feasible as-given sign assignment is authoritative.
  // Otherwise re-infer each sign from the form's values on the vertex
  // tour; a form that changes sign across the tour is misordered.
  std::optional<Point> interior = strict_interior(forms);
  if (!interior) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
      int pos = 0, neg = 0;
      for (const Point& v : verts) {
        Scalar val = forms[i].eval(v);
        if (val > 0) ++pos;
        if (val < 0) ++neg;
      }
      if (pos > 0 && neg > 0) {
        throw PolygonError(PolygonErrorKind::NotConsecutiveOrder,
                           static_cast<int>(i) + 1,
                           "edge form changes sign along the vertex tour");
      }
      if (neg > 0) forms[i] = negated(forms[i]);
    }
    interior = strict_interior(forms);
    if (!interior) {
      throw PolygonError(PolygonErrorKind::EmptyInterior, 0,
                         "forms have no common interior");
    }
  }

  // Redundant halfplanes would break the edge indexing, so they are hard
  // errors: form i is redundant iff dropping it cannot expose any point
  // with form value < 0.
  for (std::size_t i = 0; i < forms.size(); ++i) {
    std::vector<LinearConstraint> cs;
    for (std::size_t j = 0; j < forms.size(); ++j) {
      if (j == i) {
        cs.push_back({Scalar(-forms[j].a1), Scalar(-forms[j].a2),
                      Scalar(-forms[j].b), true});
      } else {
        cs.push_back({forms[j].a1, forms[j].a2, forms[j].b, false});
      }
    }
    if (!feasible_point(cs)) {
      throw PolygonError(PolygonErrorKind::RedundantHalfplane,
                         static_cast<int>(i) + 1,
                         "edge " + std::to_string(i + 1) +
                             " is implied by the others");
    }
  }

  // Every tour vertex must lie on the polygon.
  for (std::size_t vi = 0; vi < verts.size(); ++vi) {
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if (forms[i].eval(verts[vi]) < 0) {
        throw PolygonError(PolygonErrorKind::NotConsecutiveOrder,
                           static_cast<int>(i) + 1,
                           "vertex of consecutive edges falls outside");
      }
    }
  }

  if (kind == PolygonKind::Bounded) {
    if (recession_nonzero(forms)) {
      throw PolygonError(PolygonErrorKind::UnboundedButMarkedBounded, 0,
                         "forms describe an unbounded region");
    }
  } else {
    if (!recession_nonzero(forms)) {
      throw PolygonError(PolygonErrorKind::BoundedButMarkedUnbounded, 0,
                         "forms describe a bounded region");
    }
    if (!recession_full_dim(forms)) {
      throw PolygonError(PolygonErrorKind::ParallelUnboundedEdges, 0,
                         "unbounded edges are parallel");
    }
  }

  Polygon P;
  P.kind_ = kind;
  P.forms_ = std::move(forms);
  P.vertices_ = std::move(verts);
  P.interior_ = *interior;
  return P;
}

IlluminationSets illuminated(const Polygon& P, const Point& x) {
  IlluminationSets sets;
  for (int i = P.min_edge_index(); i <= P.ground_m(); ++i) {
    Scalar v = P.form_at(i).eval(x);
    if (v < 0) {
      sets.lt.push_back(i);
    } else if (v == 0) {
      sets.eq.push_back(i);
    }
  }
  return sets;
}

Point interval_witness(const Polygon& P, int a, int b) {
  if (P.kind() != PolygonKind::CanonicalUnbounded) {
    throw std::invalid_argument(
        "interval_witness: polygon must be canonical unbounded");
  }
  if (a < 1 || a > b || b > P.ground_m()) {
    throw std::invalid_argument("interval_witness: bad interval");
  }
  std::vector<LinearConstraint> cs;
  for (int i = 1; i <= P.ground_m(); ++i) {
    const AffineForm& f = P.form_at(i);
    if (a <= i && i <= b) {
      cs.push_back({Scalar(-f.a1), Scalar(-f.a2), Scalar(-f.b), true});
    } else {
      cs.push_back({f.a1, f.a2, f.b, true});
    }
  }
  std::optional<Point> x = feasible_point(cs);
  if (!x) {
    throw PolygonError(PolygonErrorKind::InfeasibleWitness, 0,
                       "no point illuminates exactly {" + std::to_string(a) +
                           ".." + std::to_string(b) + "}");
  }
  return *x;
}

}  // namespace polyrep
