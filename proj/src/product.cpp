#include "polyrep/product.hpp"

#include <algorithm>

namespace polyrep {

void validate_rep(const Polygon& P, const ProductRep& rep) {
  int lo = P.min_edge_index();
  int hi = P.ground_m();
  for (const auto& member : rep.members) {
    for (int e : member) {
      if (e < lo || e > hi) {
        throw std::out_of_range("representation index " + std::to_string(e) +
                                " outside " + std::to_string(lo) + ".." +
                                std::to_string(hi));
      }
    }
  }
}

Scalar eval_product(const Polygon& P, const std::vector<int>& member,
                    const Point& x) {
  int lo = P.min_edge_index();
  int hi = P.ground_m();
  Scalar value(1);
  for (int e : member) {
    if (e < lo || e > hi) {
      throw std::out_of_range("eval_product: index " + std::to_string(e) +
                              " outside " + std::to_string(lo) + ".." +
                              std::to_string(hi));
    }
    value *= P.form_at(e).eval(x);
  }
  return value;
}

Scalar PolyTable::eval(const Point& x) const {
  Scalar acc(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    Scalar row(0);
    for (std::size_t j = c[i].size(); j-- > 0;) {
      row = Scalar(row * x.y + c[i][j]);
    }
    acc = Scalar(acc * x.x + row);
  }
  return acc;
}

PolyTable expand_product(const std::vector<AffineForm>& factors) {
  PolyTable table;
  table.c = {{Scalar(1)}};
  for (const AffineForm& f : factors) {
    std::size_t rows = table.c.size() + 1;
    std::size_t cols = table.c[0].size() + 1;
    std::vector<std::vector<Scalar>> next(
        rows, std::vector<Scalar>(cols, Scalar(0)));
    for (std::size_t i = 0; i + 1 < rows; ++i) {
      for (std::size_t j = 0; j + 1 < cols; ++j) {
        const Scalar& v = table.c[i][j];
        if (v == 0) continue;
        next[i + 1][j] += f.a1 * v;
        next[i][j + 1] += f.a2 * v;
        next[i][j] += f.b * v;
      }
    }
    table.c = std::move(next);
  }
  return table;
}

std::string format_poly(const PolyTable& table) {
  std::string out;
  for (std::size_t i = table.c.size(); i-- > 0;) {
    for (std::size_t j = table.c[i].size(); j-- > 0;) {
      const Scalar& v = table.c[i][j];
      if (v == 0) continue;
      std::string term;
      if (i > 0) term += "x1" + (i > 1 ? "^" + std::to_string(i) : "");
      if (j > 0) {
        if (!term.empty()) term += "*";
        term += "x2" + (j > 1 ? "^" + std::to_string(j) : "");
      }
      Scalar mag = v < 0 ? Scalar(-v) : v;
      std::string coeff;
      if (mag != 1 || term.empty()) {
        coeff = format_scalar(mag);
        if (!term.empty()) coeff += "*";
      }
      if (out.empty()) {
        out += (v < 0 ? "-" : "") + coeff + term;
      } else {
        out += (v < 0 ? " - " : " + ") + coeff + term;
      }
    }
  }
  return out.empty() ? "0" : out;
}

VerifyReport verify_sampled(const Polygon& P, const ProductRep& rep,
                            const std::vector<SamplePoint>& samples) {
  validate_rep(P, rep);
  VerifyReport report;

  std::vector<char> mentioned(static_cast<std::size_t>(P.ground_m()) + 1, 0);
  for (const auto& member : rep.members) {
    for (int e : member) mentioned[e] = 1;
  }
  for (int e = P.min_edge_index(); e <= P.ground_m(); ++e) {
    if (!mentioned[e]) report.covers = false;
  }

  for (const SamplePoint& s : samples) {
    ++report.points_checked;
    bool all_pos = true, all_nonneg = true;
    std::vector<Scalar> values;
    values.reserve(rep.members.size());
    for (const auto& member : rep.members) {
      Scalar v = eval_product(P, member, s.p);
      if (v <= 0) all_pos = false;
      if (v < 0) all_nonneg = false;
      values.push_back(std::move(v));
    }
    bool claim = rep.mode == RepMode::Open ? all_pos : all_nonneg;
    bool truth = rep.mode == RepMode::Open
                     ? s.tag == Membership::Interior
                     : s.tag != Membership::Exterior;
    if (claim != truth) {
      report.pass = false;
      report.counterexample = s;
      report.counterexample_values = std::move(values);
      break;
    }
  }
  return report;
}

VerifyReport verify_sampled(const Polygon& P, const ProductRep& rep) {
  return verify_sampled(P, rep, sample_witnesses(P));
}

std::optional<bool> verify_exact(const Polygon& P, const ProductRep& rep) {
  if (P.kind() != PolygonKind::CanonicalUnbounded) return std::nullopt;
  validate_rep(P, rep);
  if (rep.mode == RepMode::Closed) {
    // A repeated edge squares into its product: signs are unchanged off the
    // edge line, but the product stays zero on the whole line, so exterior
    // points on it can satisfy "all >= 0" and break the closed claim. The
    // interval reduction only speaks for repeat-free members; anything else
    // is left to sampling. Open claims are immune: a zero already fails
    // "all > 0", so even powers only ever help rejection.
    for (const auto& member : rep.members) {
      std::vector<int> sorted = member;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return std::nullopt;
    }
  }
  SetFamily fam;
  fam.m = P.ground_m();
  fam.members = rep.members;
  fam = simplify_family(normalize_family(std::move(fam)));
  if (rep.mode == RepMode::Open) {
    return !check_I(fam).has_value();
  }
  return !check_J(fam).has_value();
}

}  // namespace polyrep
