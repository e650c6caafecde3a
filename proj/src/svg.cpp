#include "polyrep/svg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyrep {

namespace {

double to_double(const Scalar& v) { return v.convert_to<double>(); }

struct Frame {
  double x0, y0, x1, y1;  // world window
  int w, h;               // pixels

  double px(double x) const { return (x - x0) / (x1 - x0) * w; }
  double py(double y) const { return h - (y - y0) / (y1 - y0) * h; }
  double diag() const { return std::hypot(x1 - x0, y1 - y0); }
};

std::array<Scalar, 4> default_window(const Polygon& P) {
  std::vector<Point> pts = P.vertices();
  pts.push_back(P.interior_point());
  Scalar x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  Scalar extent = std::max(Scalar(x1 - x0), Scalar(y1 - y0));
  if (extent == 0) extent = 1;
  Scalar pad = Scalar(extent / 4);
  return {Scalar(x0 - pad), Scalar(y0 - pad), Scalar(x1 + pad),
          Scalar(y1 + pad)};
}

void emit_line(std::ostringstream& out, const Frame& fr, double ax, double ay,
               double bx, double by, const char* style) {
  out << "  <line x1=\"" << fr.px(ax) << "\" y1=\"" << fr.py(ay) << "\" x2=\""
      << fr.px(bx) << "\" y2=\"" << fr.py(by) << "\" " << style << "/>\n";
}

// The full zero-line of f, drawn well past the window on both sides.
void emit_full_line(std::ostringstream& out, const Frame& fr,
                    const AffineForm& f, const char* style) {
  double a1 = to_double(f.a1), a2 = to_double(f.a2), b = to_double(f.b);
  double norm = std::hypot(a1, a2);
  if (norm == 0) return;
  double dx = a2 / norm, dy = -a1 / norm;  // along the line
  double cx = (fr.x0 + fr.x1) / 2, cy = (fr.y0 + fr.y1) / 2;
  // Project the window center onto the line.
  double dist = (a1 * cx + a2 * cy + b) / norm;
  double bx = cx - dist * a1 / norm, by = cy - dist * a2 / norm;
  double t = fr.diag();
  emit_line(out, fr, bx - t * dx, by - t * dy, bx + t * dx, by + t * dy, style);
}

// Boundary ray of an edge: from vertex v along f's line, on the side where
// the adjacent edge form g grows.
void emit_ray(std::ostringstream& out, const Frame& fr, const AffineForm& f,
              const AffineForm& g, const Point& v, const char* style) {
  double dx = to_double(f.a2), dy = -to_double(f.a1);
  double norm = std::hypot(dx, dy);
  if (norm == 0) return;
  dx /= norm;
  dy /= norm;
  if (to_double(g.a1) * dx + to_double(g.a2) * dy < 0) {
    dx = -dx;
    dy = -dy;
  }
  double t = 3 * fr.diag();
  double vx = to_double(v.x), vy = to_double(v.y);
  emit_line(out, fr, vx, vy, vx + t * dx, vy + t * dy, style);
}

}  // namespace

std::string render_svg(const Polygon& P, const ProductRep& rep,
                       const PlotOptions& opt) {
  if (opt.grid < 1 || opt.width < 1 || opt.height < 1) {
    throw std::invalid_argument("render_svg: grid and size must be positive");
  }
  validate_rep(P, rep);
  std::array<Scalar, 4> win = opt.window ? *opt.window : default_window(P);
  if (!(win[0] < win[2]) || !(win[1] < win[3])) {
    throw std::invalid_argument("render_svg: window must have positive area");
  }
  Frame fr{to_double(win[0]), to_double(win[1]), to_double(win[2]),
           to_double(win[3]), opt.width, opt.height};

  std::ostringstream out;
  out.precision(8);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fr.w
      << ' ' << fr.h << "\" width=\"" << fr.w << "\" height=\"" << fr.h
      << "\">\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"" << fr.w << "\" height=\"" << fr.h
      << "\" fill=\"#ffffff\"/>\n";

  // Shaded cells: center has every member product strictly positive.
  const int g = opt.grid;
  Scalar dx = Scalar((win[2] - win[0]) / g);
  Scalar dy = Scalar((win[3] - win[1]) / g);
  double cw = static_cast<double>(fr.w) / g;
  double ch = static_cast<double>(fr.h) / g;
  out << "  <g fill=\"#9ec5e8\">\n";
  for (int row = 0; row < g; ++row) {
    Point c;
    c.y = Scalar(win[1] + dy * (2 * row + 1) / 2);
    int run_start = -1;
    for (int col = 0; col <= g; ++col) {
      bool inside = false;
      if (col < g) {
        c.x = Scalar(win[0] + dx * (2 * col + 1) / 2);
        inside = true;
        for (const std::vector<int>& s : rep.members) {
          if (!(eval_product(P, s, c) > 0)) {
            inside = false;
            break;
          }
        }
      }
      if (inside && run_start < 0) run_start = col;
      if (!inside && run_start >= 0) {
        out << "    <rect x=\"" << run_start * cw << "\" y=\""
            << fr.h - (row + 1) * ch << "\" width=\"" << (col - run_start) * cw
            << "\" height=\"" << ch << "\"/>\n";
        run_start = -1;
      }
    }
  }
  out << "  </g>\n";

  // Zero-line of every factor the representation uses.
  const char* dashed =
      "stroke=\"#c65d21\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";
  std::set<int> used;
  for (const std::vector<int>& s : rep.members) used.insert(s.begin(), s.end());
  for (int i : used) emit_full_line(out, fr, P.form_at(i), dashed);

  // Boundary: closed tour when bounded, chain plus two rays otherwise.
  const char* solid = "stroke=\"#1d3a5f\" stroke-width=\"2\" fill=\"none\"";
  const std::vector<Point>& vs = P.vertices();
  if (P.kind() == PolygonKind::Bounded) {
    out << "  <polygon points=\"";
    for (const Point& v : vs) {
      out << fr.px(to_double(v.x)) << ',' << fr.py(to_double(v.y)) << ' ';
    }
    out << "\" " << solid << "/>\n";
  } else if (vs.empty()) {
    emit_full_line(out, fr, P.forms().front(), solid);
  } else {
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      emit_line(out, fr, to_double(vs[i].x), to_double(vs[i].y),
                to_double(vs[i + 1].x), to_double(vs[i + 1].y), solid);
    }
    const std::vector<AffineForm>& fs = P.forms();
    emit_ray(out, fr, fs.front(), fs[1], vs.front(), solid);
    emit_ray(out, fr, fs.back(), fs[fs.size() - 2], vs.back(), solid);
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace polyrep
