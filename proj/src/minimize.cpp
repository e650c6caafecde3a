#include "polyrep/minimize.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "polyrep/construct.hpp"
#include "polyrep/matrix_search.hpp"
#include "polyrep/prefix_matrix.hpp"

namespace polyrep {

ExactOutcome exact_n(int m, int k, ExactMode mode, unsigned long long budget) {
  if (m < 1) throw std::invalid_argument("exact_n: m must be positive");
  if (k < 1) throw std::invalid_argument("exact_n: k must be positive");
  auto t0 = std::chrono::steady_clock::now();
  ExactOutcome out;
  for (int n = lower_bound_n(m, k); n <= m; ++n) {
    MatrixSearchOptions opt;
    opt.m = m;
    opt.k = k;
    opt.n = n;
    opt.cond = mode == ExactMode::Open ? MatrixCond::Distinct : MatrixCond::Neighbor;
    opt.budget = budget - out.nodes;
    opt.single_flip_only = false;  // exactness needs the full move set
    MatrixSearchResult r = search_prefix_matrix(opt);
    out.nodes += r.nodes;
    if (r.status == SearchStatus::Found) {
      ExactResult res;
      res.m = m;
      res.k = k;
      res.mode = mode;
      res.n_min = n;
      res.witness = from_prefix(*r.matrix);
      res.stats.nodes = out.nodes;
      res.stats.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      out.status = SearchStatus::Found;
      out.result = std::move(res);
      out.lo = n;
      out.hi = n;
      return out;
    }
    if (r.status == SearchStatus::BudgetExceeded) {
      out.status = SearchStatus::BudgetExceeded;
      out.lo = n;
      out.hi = m;  // staircase width always works
      return out;
    }
  }
  // Width m admits the singleton staircase, so the loop cannot exhaust it.
  throw std::logic_error("exact_n: search exhausted the staircase width");
}

namespace {

bool family_passes(const SetFamily& fam, ExactMode mode) {
  if (mode == ExactMode::Open) return !detail::check_I_naive(fam).has_value();
  return !detail::check_J_naive(fam).has_value();
}

}  // namespace

int brute_oracle(int m, int k, ExactMode mode) {
  if (m < 1 || m > 7) {
    throw std::invalid_argument("brute_oracle: m must be within 1..7");
  }
  if (k < 1) throw std::invalid_argument("brute_oracle: k must be positive");
  // Candidate members: nonempty subsets of {1..m} with at most k elements,
  // in ascending bitmask order.
  std::vector<std::vector<int>> pool;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    if (std::popcount(mask) > k) continue;
    std::vector<int> s;
    for (int i = 1; i <= m; ++i) {
      if (mask & (1u << (i - 1))) s.push_back(i);
    }
    pool.push_back(std::move(s));
  }
  const int p = static_cast<int>(pool.size());
  for (int n = 1; n <= m; ++n) {
    std::vector<int> idx(n);
    SetFamily fam;
    fam.m = m;
    fam.members.resize(n);
    // Strictly increasing index combinations, lexicographic.
    auto rec = [&](auto&& self, int depth, int first) -> bool {
      if (depth == n) return family_passes(fam, mode);
      for (int i = first; i <= p - (n - depth); ++i) {
        idx[depth] = i;
        fam.members[depth] = pool[i];
        if (self(self, depth + 1, i + 1)) return true;
      }
      return false;
    };
    if (rec(rec, 0, 0)) return n;
  }
  // Unreachable: singletons are in the pool and the staircase passes.
  throw std::logic_error("brute_oracle: no family up to width m");
}

std::optional<ExactCacheEntry> cache_lookup(
    const std::vector<ExactCacheEntry>& cache, int m, int k, ExactMode mode) {
  for (const ExactCacheEntry& e : cache) {
    if (e.m == m && e.k == k && e.mode == mode) return e;
  }
  return std::nullopt;
}

void cache_store(std::vector<ExactCacheEntry>& cache, const ExactCacheEntry& e) {
  for (ExactCacheEntry& old : cache) {
    if (old.m == e.m && old.k == e.k && old.mode == e.mode) {
      old = e;
      return;
    }
  }
  cache.push_back(e);
}

}  // namespace polyrep
