#pragma once

#include <optional>
#include <vector>

#include "polyrep/set_family.hpp"
#include "polyrep/witnesses.hpp"

namespace polyrep {

enum class RepMode { Open, Closed };

// Product representation: each member lists edge indices (repeats allowed)
// whose forms multiply into one polynomial. Open claims the interior as
// {all products > 0}, Closed claims the polygon as {all products >= 0}.
// Members use the polygon's ground indexing (bounded polygons include 0).
struct ProductRep {
  RepMode mode = RepMode::Closed;
  std::vector<std::vector<int>> members;
};

// Throws std::out_of_range on an index outside the polygon's edge range.
void validate_rep(const Polygon& P, const ProductRep& rep);

// Exact product of edge form values at x; the empty member yields 1.
Scalar eval_product(const Polygon& P, const std::vector<int>& member,
                    const Point& x);

// Dense coefficient table of a bivariate polynomial: coeff(i, j) is the
// coefficient of x1^i x2^j.
struct PolyTable {
  std::vector<std::vector<Scalar>> c;  // c[i][j], rectangular

  int degree() const { return static_cast<int>(c.size()) - 1; }
  Scalar eval(const Point& x) const;
};

// Exact expansion of a product of affine forms; the empty product is the
// constant 1.
PolyTable expand_product(const std::vector<AffineForm>& factors);

std::string format_poly(const PolyTable& table);

struct VerifyReport {
  bool pass = true;
  std::size_t points_checked = 0;
  // First sample violating the mode's equivalence, with the product
  // values of every member at that point.
  std::optional<SamplePoint> counterexample;
  std::vector<Scalar> counterexample_values;
  // Necessary condition: the members jointly mention every edge index.
  bool covers = true;
};

// Sampled geometric verification over the given points: Open demands
// (x interior <=> all products > 0), Closed demands (x in P <=> all
// products >= 0). Sound to reject, not complete to accept.
VerifyReport verify_sampled(const Polygon& P, const ProductRep& rep,
                            const std::vector<SamplePoint>& samples);

// Convenience overload over sample_witnesses(P).
VerifyReport verify_sampled(const Polygon& P, const ProductRep& rep);

// Exact combinatorial verdict via the interval conditions; only canonical
// unbounded polygons reduce this way, others return nullopt. Open members
// are parity-reduced first (even powers can only strengthen rejection);
// a closed member with a repeated edge stays zero on that edge's whole
// line, which the reduction cannot see, so such claims also return
// nullopt and are left to sampling.
std::optional<bool> verify_exact(const Polygon& P, const ProductRep& rep);

}  // namespace polyrep
