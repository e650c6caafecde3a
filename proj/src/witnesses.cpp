#include "polyrep/witnesses.hpp"

#include <algorithm>
#include <set>

namespace polyrep {

Membership classify(const Polygon& P, const Point& x) {
  bool boundary = false;
  for (const AffineForm& f : P.forms()) {
    Scalar v = f.eval(x);
    if (v < 0) return Membership::Exterior;
    if (v == 0) boundary = true;
  }
  return boundary ? Membership::Boundary : Membership::Interior;
}

const char* membership_name(Membership tag) {
  switch (tag) {
    case Membership::Interior:
      return "interior";
    case Membership::Boundary:
      return "boundary";
    case Membership::Exterior:
      return "exterior";
  }
  return "?";
}

namespace {

Int ceil_abs(const Scalar& v) {
  Int num = abs(numerator(v));
  Int den = denominator(v);
  return (num + den - 1) / den;
}

// A point on the relative interior of each stored edge, in storage order.
std::vector<Point> edge_points(const Polygon& P) {
  const auto& forms = P.forms();
  const auto& verts = P.vertices();
  int E = static_cast<int>(forms.size());
  std::vector<Point> pts;
  pts.reserve(E);
  Scalar half(1, 2);
  for (int i = 0; i < E; ++i) {
    // Adjacent tour vertices of stored edge i: bounded edges sit between
    // vertices i-1 and i (cyclic); unbounded edge i touches vertices i-1
    // and i of the open chain where present.
    std::vector<const Point*> adj;
    if (P.kind() == PolygonKind::Bounded) {
      adj.push_back(&verts[(i + E - 1) % E]);
      adj.push_back(&verts[i]);
    } else {
      if (i - 1 >= 0 && i - 1 < static_cast<int>(verts.size())) {
        adj.push_back(&verts[i - 1]);
      }
      if (i < static_cast<int>(verts.size())) {
        adj.push_back(&verts[i]);
      }
    }
    const AffineForm& f = forms[i];
    if (adj.size() == 2 && !(*adj[0] == *adj[1])) {
      pts.push_back(Point{Scalar((adj[0]->x + adj[1]->x) * half),
                          Scalar((adj[0]->y + adj[1]->y) * half)});
    } else if (!adj.empty()) {
      // Ray edge: walk from the endpoint along the edge direction that
      // stays on the polygon.
      Point base = *adj[0];
      Point d1{f.a2, Scalar(-f.a1)};
      Point cand{Scalar(base.x + d1.x), Scalar(base.y + d1.y)};
      if (classify(P, cand) == Membership::Boundary) {
        pts.push_back(cand);
      } else {
        pts.push_back(Point{Scalar(base.x - d1.x), Scalar(base.y - d1.y)});
      }
    } else {
      // Single-edge polygon: any point of the line.
      if (f.a2 != 0) {
        pts.push_back(Point{Scalar(0), Scalar(-f.b / f.a2)});
      } else {
        pts.push_back(Point{Scalar(-f.b / f.a1), Scalar(0)});
      }
    }
  }
  return pts;
}

}  // namespace

std::vector<SamplePoint> sample_witnesses(const Polygon& P) {
  const auto& forms = P.forms();
  const auto& verts = P.vertices();

  // Offset scale from the coordinate magnitudes of the computed points.
  Int scale = 1;
  auto absorb = [&scale](const Point& p) {
    scale = std::max(scale, ceil_abs(p.x));
    scale = std::max(scale, ceil_abs(p.y));
  };
  absorb(P.interior_point());
  for (const Point& v : verts) absorb(v);
  Scalar eps = Scalar(scale, 1024);

  std::vector<Point> raw;
  raw.push_back(P.interior_point());

  static const int kDirs8[8][2] = {{-1, -1}, {1, -1}, {-1, 1}, {1, 1},
                                   {-1, 0},  {1, 0},  {0, -1}, {0, 1}};

  std::vector<Point> on_edge = edge_points(P);
  for (std::size_t i = 0; i < on_edge.size(); ++i) {
    const AffineForm& f = forms[i];
    raw.push_back(on_edge[i]);
    raw.push_back(Point{Scalar(on_edge[i].x + eps * f.a1),
                        Scalar(on_edge[i].y + eps * f.a2)});
    raw.push_back(Point{Scalar(on_edge[i].x - eps * f.a1),
                        Scalar(on_edge[i].y - eps * f.a2)});
    // Unit-scale offsets reach clearly off-boundary points such as (-1, 0)
    // for the halfplane {x1 >= 0}.
    raw.push_back(Point{Scalar(on_edge[i].x + scale * f.a1),
                        Scalar(on_edge[i].y + scale * f.a2)});
    raw.push_back(Point{Scalar(on_edge[i].x - scale * f.a1),
                        Scalar(on_edge[i].y - scale * f.a2)});
  }

  for (const Point& v : verts) {
    raw.push_back(v);
    // Unit-scale first: the far probes, e.g. (0,-1) and (-1,-1) off the
    // quadrant corner, then the tight eps ring.
    for (const auto& d : kDirs8) {
      raw.push_back(
          Point{Scalar(v.x + scale * d[0]), Scalar(v.y + scale * d[1])});
    }
    for (const auto& d : kDirs8) {
      raw.push_back(
          Point{Scalar(v.x + eps * d[0]), Scalar(v.y + eps * d[1])});
    }
  }

  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      std::optional<Point> q = line_intersection(forms[i], forms[j]);
      if (!q) continue;
      raw.push_back(*q);
      for (const auto& d : kDirs8) {
        if (d[0] == 0 || d[1] == 0) continue;  // the four diagonals
        raw.push_back(
            Point{Scalar(q->x + eps * d[0]), Scalar(q->y + eps * d[1])});
      }
    }
  }

  // Far circle: rational directions from the half-angle parametrization
  // t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)), with both orientations.
  Scalar radius = Scalar(scale) * 1024;
  for (int i = -32; i <= 32; ++i) {
    Scalar t = Scalar(i, 8);
    Scalar den = Scalar(1 + t * t);
    Scalar cx((1 - t * t) / den), cy(2 * t / den);
    raw.push_back(Point{Scalar(radius * cx), Scalar(radius * cy)});
    raw.push_back(Point{Scalar(-radius * cx), Scalar(-radius * cy)});
  }

  // Grid over the padded bounding box of the structural points.
  Scalar xlo = raw[0].x, xhi = raw[0].x, ylo = raw[0].y, yhi = raw[0].y;
  auto widen = [&](const Point& p) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  };
  widen(P.interior_point());
  for (const Point& v : verts) widen(v);
  for (const Point& p : on_edge) widen(p);
  Scalar padx = std::max<Scalar>(Scalar(xhi - xlo) / 4, Scalar(2) * scale);
  Scalar pady = std::max<Scalar>(Scalar(yhi - ylo) / 4, Scalar(2) * scale);
  xlo -= padx;
  xhi += padx;
  ylo -= pady;
  yhi += pady;
  const int G = 33;
  Scalar dx((xhi - xlo) / (G - 1)), dy((yhi - ylo) / (G - 1));
  for (int i = 0; i < G; ++i) {
    for (int j = 0; j < G; ++j) {
      raw.push_back(
          Point{Scalar(xlo + dx * i), Scalar(ylo + dy * j)});
    }
  }

  std::vector<SamplePoint> out;
  out.reserve(raw.size());
  auto cmp = [](const Point& a, const Point& b) { return lex_less(a, b); };
  std::set<Point, decltype(cmp)> seen(cmp);
  for (const Point& p : raw) {
    if (!seen.insert(p).second) continue;
    out.push_back(SamplePoint{p, classify(P, p)});
  }
  return out;
}

}  // namespace polyrep
