#include "polyrep/rational.hpp"

namespace polyrep {

Scalar make_scalar(Int num, Int den) {
  if (den == 0) {
    throw std::invalid_argument("make_scalar: zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Scalar(num, den);
}

namespace {

bool parse_int(std::string_view text, Int& out) {
  if (text.empty()) return false;
  bool neg = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) return false;
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  out = neg ? Int(-value) : value;
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::size_t slash = text.find('/');
  Int num;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) {
      throw std::invalid_argument("parse_scalar: bad rational literal: " +
                                  std::string(text));
    }
    return Scalar(num);
  }
  Int den;
  if (!parse_int(text.substr(0, slash), num) ||
      !parse_int(text.substr(slash + 1), den) || den == 0) {
    throw std::invalid_argument("parse_scalar: bad rational literal: " +
                                std::string(text));
  }
  return make_scalar(num, den);
}

std::string format_scalar(const Scalar& value) { return value.str(); }

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string format_point(const Point& p) {
  return "(" + format_scalar(p.x) + ", " + format_scalar(p.y) + ")";
}

}  // namespace polyrep
