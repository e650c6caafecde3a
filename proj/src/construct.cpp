#include "polyrep/construct.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "polyrep/gray_code.hpp"
#include "polyrep/matrix_search.hpp"
#include "polyrep/polygon.hpp"
#include "polyrep/prefix_matrix.hpp"

namespace polyrep {

int ceil_log2(long long x) {
  if (x < 1) throw std::invalid_argument("ceil_log2: x must be positive");
  int t = 0;
  while ((1LL << t) < x) ++t;
  return t;
}

int lower_bound_n(int m, int k) {
  if (m < 0) throw std::invalid_argument("lower_bound_n: m must be nonnegative");
  if (k < 1) throw std::invalid_argument("lower_bound_n: k must be positive");
  if (m == 0) return 0;
  int by_budget = (m + k - 1) / k;      // each member covers at most k edges
  int by_columns = ceil_log2(m + 1LL);  // m+1 distinct prefix columns
  return std::max(by_budget, by_columns);
}

namespace {

SetFamily drop_empty_members(SetFamily fam) {
  std::erase_if(fam.members,
                [](const std::vector<int>& s) { return s.empty(); });
  return fam;
}

bool rows_fit_budget(const PrefixMatrix& M, int k) {
  return !check_K_prime_row(M, k).has_value();
}

// A width-n family via a code prefix, if some known code of that width
// keeps every row within k changes over columns 0..m. The reflected code
// is tried first (same width, so never worse); long-run catalog codes
// rescue small k where the reflected rows change too often.
std::optional<SetFamily> family_from_codes(int m, int k, int n) {
  std::vector<GrayCode> codes;
  if (n >= 1 && n <= 16) codes.push_back(reflected(n));
  for (const GrayCatalogEntry& e : builtin_gray_catalog()) {
    if (e.n == n) codes.push_back(GrayCode{e.n, e.transitions});
  }
  for (const GrayCode& code : codes) {
    PrefixMatrix M = prefix_matrix(code, m);
    if (rows_fit_budget(M, k)) return drop_empty_members(from_prefix(M));
  }
  return std::nullopt;
}

std::optional<SetFamily> family_at_width(int m, int k, int n,
                                         unsigned long long budget) {
  if (auto fam = family_from_codes(m, k, n)) return fam;
  MatrixSearchOptions opt;
  opt.m = m;
  opt.k = k;
  opt.n = n;
  opt.cond = MatrixCond::Neighbor;
  opt.budget = budget;
  opt.single_flip_only = n > 12;
  MatrixSearchResult r = search_prefix_matrix(opt);
  if (r.status == SearchStatus::Found) {
    return drop_empty_members(from_prefix(*r.matrix));
  }
  return std::nullopt;
}

}  // namespace

SetFamily construct_family(int m, int k, unsigned long long budget) {
  if (m < 0) throw std::invalid_argument("construct_family: m must be nonnegative");
  if (k < 1) throw std::invalid_argument("construct_family: k must be positive");
  SetFamily fam;
  fam.m = m;
  if (m == 0) return fam;
  for (int n = lower_bound_n(m, k); n < m; ++n) {
    if (auto found = family_at_width(m, k, n, budget)) return *found;
  }
  for (int i = 1; i <= m; ++i) fam.members.push_back({i});  // staircase
  return fam;
}

BoundsReport theoretical_bounds(int m, int k, unsigned long long budget) {
  if (m < 1) throw std::invalid_argument("theoretical_bounds: m must be positive");
  if (k < 1) throw std::invalid_argument("theoretical_bounds: k must be positive");
  BoundsReport r;
  r.m = m;
  r.k = k;
  r.lower_n = lower_bound_n(m, k);
  r.achieved_n = static_cast<int>(construct_family(m, k, budget).members.size());
  r.sandwich_lo = r.lower_n;
  int prev = m == 1
                 ? 0
                 : static_cast<int>(construct_family(m - 1, k, budget).members.size());
  r.sandwich_hi = 1 + prev;
  r.s_ratio = make_scalar(m, k);
  r.s_log2_m = std::log2(static_cast<double>(m));
  r.s_value = std::max(static_cast<double>(m) / k, r.s_log2_m);
  return r;
}

std::vector<BoundsRow> bounds_table(int m_lo, int m_hi, int k_lo, int k_hi,
                                    unsigned long long budget) {
  if (m_lo < 1 || m_hi < m_lo) throw std::invalid_argument("bounds_table: bad m range");
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("bounds_table: bad k range");
  std::vector<BoundsRow> rows;
  for (int m = m_lo; m <= m_hi; ++m) {
    SetFamily best;  // carried across k: valid for every larger k
    for (int k = k_lo; k <= k_hi; ++k) {
      SetFamily fam = construct_family(m, k, budget);
      if (k == k_lo || fam.members.size() < best.members.size()) best = fam;
      rows.push_back(BoundsRow{m, k, lower_bound_n(m, k),
                               static_cast<int>(best.members.size())});
    }
  }
  return rows;
}

ProductRep construct_representation(const Polygon& P, int k, RepMode mode,
                                    unsigned long long budget) {
  if (k < 1) throw std::invalid_argument("construct_representation: k must be positive");
  ProductRep rep;
  rep.mode = mode;
  if (P.kind() == PolygonKind::Bounded) rep.members.push_back({0});
  SetFamily fam = construct_family(P.ground_m(), k, budget);
  for (const std::vector<int>& s : fam.members) rep.members.push_back(s);
  return rep;
}

}  // namespace polyrep
