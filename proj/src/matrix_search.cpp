#include "polyrep/matrix_search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

namespace polyrep {

namespace {

struct MatrixSearcher {
  MatrixSearchOptions opt;
  std::vector<std::uint64_t> deltas;
  std::vector<std::uint64_t> cols;   // cols[0..j]
  std::vector<int> flips;            // per row
  std::vector<std::uint64_t> ties;   // tie mask per depth
  long long capacity = 0;            // sum over rows of (k - flips[r])
  std::vector<char> visited_dense;
  std::unordered_set<std::uint64_t> visited_sparse;
  bool dense = false;
  std::uint64_t mask = 0;
  unsigned long long nodes = 0;
  bool budget_hit = false;
  std::optional<PrefixMatrix> found;

  bool visited(std::uint64_t c) const {
    return dense ? visited_dense[c] != 0 : visited_sparse.count(c) != 0;
  }
  void mark(std::uint64_t c, bool on) {
    if (dense) {
      visited_dense[c] = on ? 1 : 0;
    } else if (on) {
      visited_sparse.insert(c);
    } else {
      visited_sparse.erase(c);
    }
  }

  // The neighbor condition on the column pair (a, b), reading columns -1
  // and m+1 as copies of 0 and m: some row r has
  // col[a-1]_r = col[a]_r != col[b]_r = col[b+1]_r.
  bool pair_ok(int a, int b, int bplus) const {
    std::uint64_t A = cols[a == 0 ? 0 : a - 1];
    std::uint64_t B = cols[a];
    std::uint64_t C = cols[b];
    std::uint64_t D = cols[bplus];
    return (~(A ^ B) & ~(C ^ D) & (B ^ C) & mask) != 0;
  }

  void place(int j) {
    if (found || budget_hit) return;
    if (++nodes > opt.budget) {
      budget_hit = true;
      return;
    }
    if (j > opt.m) {
      // Pairs (a, m) become decided only now, with column m+1 = column m.
      if (opt.cond == MatrixCond::Neighbor) {
        for (int a = 0; a < opt.m; ++a) {
          if (!pair_ok(a, opt.m, opt.m)) return;
        }
      }
      PrefixMatrix M;
      M.n = opt.n;
      M.m = opt.m;
      M.cols = cols;
      if (opt.cond == MatrixCond::Neighbor && !check_J_prime(M)) {
        throw std::logic_error("matrix search: incremental check mismatch");
      }
      found = std::move(M);
      return;
    }
    std::uint64_t prev = cols[j - 1];
    for (std::uint64_t delta : deltas) {
      int weight = std::popcount(delta);
      if (weight > capacity) break;  // deltas sorted by popcount
      if (static_cast<long long>(opt.m - j) > capacity - weight) continue;
      std::uint64_t next = prev ^ delta;
      if (visited(next)) continue;
      bool over = false;
      for (std::uint64_t d = delta; d; d &= d - 1) {
        if (flips[std::countr_zero(d)] + 1 > opt.k) {
          over = true;
          break;
        }
      }
      if (over) continue;
      // Rows that are still pairwise tied must stay nonincreasing.
      std::uint64_t tie = ties[j - 1];
      if (((~next & (next >> 1)) & tie) != 0) continue;
      cols[j] = next;
      if (opt.cond == MatrixCond::Neighbor) {
        // Placing column j settles the pairs (a, j-1) for a < j-1.
        bool dead = false;
        for (int a = 0; a + 1 < j; ++a) {
          if (!pair_ok(a, j - 1, j)) {
            dead = true;
            break;
          }
        }
        if (dead) continue;
      }
      ties[j] = tie & ~(next ^ (next >> 1));
      for (std::uint64_t d = delta; d; d &= d - 1) {
        ++flips[std::countr_zero(d)];
      }
      capacity -= weight;
      mark(next, true);
      place(j + 1);
      mark(next, false);
      capacity += weight;
      for (std::uint64_t d = delta; d; d &= d - 1) {
        --flips[std::countr_zero(d)];
      }
      if (found || budget_hit) return;
    }
  }
};

}  // namespace

MatrixSearchResult search_prefix_matrix(const MatrixSearchOptions& opt) {
  if (opt.m < 1 || opt.k < 1 || opt.n < 1 || opt.n > 64 ||
      opt.budget < 1) {
    throw std::invalid_argument("matrix search: bad arguments");
  }
  if (!opt.single_flip_only && opt.n > 24) {
    throw std::invalid_argument(
        "matrix search: full column steps need n <= 24");
  }
  MatrixSearcher s;
  s.opt = opt;
  s.mask = opt.n == 64 ? ~0ull : (1ull << opt.n) - 1;
  if (opt.single_flip_only) {
    for (int b = 0; b < opt.n; ++b) s.deltas.push_back(1ull << b);
  } else {
    for (std::uint64_t d = 1; d <= s.mask; ++d) s.deltas.push_back(d);
    std::stable_sort(s.deltas.begin(), s.deltas.end(),
                     [](std::uint64_t a, std::uint64_t b) {
                       return std::popcount(a) < std::popcount(b);
                     });
  }
  s.cols.assign(static_cast<std::size_t>(opt.m) + 1, 0);
  s.flips.assign(opt.n, 0);
  s.ties.assign(static_cast<std::size_t>(opt.m) + 1, 0);
  s.ties[0] = opt.n >= 2 ? (s.mask >> 1) : 0;  // all adjacent pairs tied
  s.capacity = static_cast<long long>(opt.n) * opt.k;
  s.dense = opt.n <= 20;
  if (s.dense) {
    s.visited_dense.assign(std::size_t{1} << opt.n, 0);
  }
  s.mark(0, true);
  s.place(1);

  MatrixSearchResult result;
  result.nodes = s.nodes;
  if (s.found) {
    result.status = SearchStatus::Found;
    result.matrix = std::move(s.found);
  } else {
    result.status = s.budget_hit ? SearchStatus::BudgetExceeded
                                 : SearchStatus::Exhausted;
  }
  return result;
}

}  // namespace polyrep
