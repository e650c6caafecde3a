#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polyrep {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Always held in canonical form: reduced fraction,
// positive denominator, integers print without "/1".
using Scalar = boost::multiprecision::cpp_rational;

// Builds num/den with the denominator sign folded into the numerator.
// The underlying two-argument constructor rejects negative denominators.
Scalar make_scalar(Int num, Int den);

// Parses "p" or "p/q" with optional leading '-' on p (and on q, which is
// normalized away). No whitespace, no decimals, no exponents.
// Throws std::invalid_argument on anything else, including q == 0.
Scalar parse_scalar(std::string_view text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 1.
std::string format_scalar(const Scalar& value);

struct Point {
  Scalar x;
  Scalar y;

  bool operator==(const Point& other) const = default;
};

// Lexicographic order, used only to deduplicate sample sets.
bool lex_less(const Point& a, const Point& b);

std::string format_point(const Point& p);

}  // namespace polyrep
