#include "polyrep/gray_code.hpp"

#include <bit>
#include <stdexcept>

namespace polyrep {

std::vector<std::uint64_t> gray_columns(const GrayCode& code) {
  std::vector<std::uint64_t> cols;
  cols.reserve(code.transitions.size() + 1);
  std::uint64_t cur = 0;
  cols.push_back(cur);
  for (std::size_t t = 0; t + 1 < code.transitions.size(); ++t) {
    cur ^= 1ull << code.transitions[t];
    cols.push_back(cur);
  }
  return cols;
}

void validate_gray(const GrayCode& code) {
  if (code.n < 1 || code.n > 16) {
    throw std::invalid_argument("gray code: width outside 1..16");
  }
  std::size_t total = std::size_t{1} << code.n;
  if (code.transitions.size() != total) {
    throw std::invalid_argument("gray code: transition count != 2^n");
  }
  std::vector<char> visited(total, 0);
  std::uint64_t cur = 0;
  for (std::size_t t = 0; t < total; ++t) {
    if (visited[cur]) {
      throw std::invalid_argument("gray code: repeated column");
    }
    visited[cur] = 1;
    int bit = code.transitions[t];
    if (bit < 0 || bit >= code.n) {
      throw std::invalid_argument("gray code: transition bit out of range");
    }
    cur ^= 1ull << bit;
  }
  if (cur != 0) {
    throw std::invalid_argument("gray code: does not close the cycle");
  }
}

GrayCode reflected(int n) {
  if (n < 1 || n > 16) {
    throw std::invalid_argument("reflected: width outside 1..16");
  }
  std::size_t total = std::size_t{1} << n;
  GrayCode code;
  code.n = n;
  code.transitions.resize(total);
  for (std::size_t t = 0; t < total; ++t) {
    std::uint64_t g = t ^ (t >> 1);
    std::uint64_t next = ((t + 1) % total) ^ (((t + 1) % total) >> 1);
    code.transitions[t] = std::countr_zero(g ^ next);
  }
  return code;
}

RunProfile run_profile(const GrayCode& code) {
  validate_gray(code);
  int total = 1 << code.n;
  RunProfile profile;
  profile.runs.resize(code.n);
  profile.min_run = total;
  for (int bit = 0; bit < code.n; ++bit) {
    std::vector<int> positions;
    for (int t = 0; t < total; ++t) {
      if (code.transitions[t] == bit) positions.push_back(t);
    }
    // Every bit flips at least twice in a valid cyclic code.
    auto& runs = profile.runs[bit];
    for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
      runs.push_back(positions[i + 1] - positions[i]);
    }
    runs.push_back(total - positions.back() + positions.front());
    for (int r : runs) {
      if (r < profile.min_run) profile.min_run = r;
    }
  }
  return profile;
}

namespace {

struct GraySearcher {
  int n = 0;
  int target = 1;
  unsigned long long budget = 0;
  bool canonical = true;
  int total = 0;
  std::vector<char> visited;
  std::vector<int> trans;
  std::vector<int> last_flip;   // -1 until first flip
  std::vector<int> first_flip;  // -1 until first flip
  std::vector<int> flip_count;
  int bits_used = 0;  // canonical mode: bits 0..bits_used-1 seen
  unsigned long long nodes = 0;
  bool budget_hit = false;
  bool stopped = false;
  std::function<bool(const GrayCode&)> emit;

  void run() {
    visited.assign(total, 0);
    trans.assign(total, 0);
    last_flip.assign(n, -1);
    first_flip.assign(n, -1);
    flip_count.assign(n, 0);
    // A cyclic code needs every run at least target twice per bit.
    if (2 * target > total) return;
    dfs(0, 0);
  }

  bool wrap_ok(int bit) const {
    return total - last_flip[bit] + first_flip[bit] >= target;
  }

  void dfs(std::uint64_t col, int t) {
    if (stopped || budget_hit) return;
    if (++nodes > budget) {
      budget_hit = true;
      return;
    }
    if (t == total) {
      for (int bit = 0; bit < n; ++bit) {
        if (!wrap_ok(bit)) return;
      }
      GrayCode code;
      code.n = n;
      code.transitions = trans;
      if (!emit(code)) stopped = true;
      return;
    }
    visited[col] = 1;
    int limit = canonical ? std::min(n, bits_used + 1) : n;
    for (int bit = 0; bit < limit; ++bit) {
      if (last_flip[bit] >= 0 && t - last_flip[bit] < target) continue;
      std::uint64_t next = col ^ (1ull << bit);
      int remaining = total - t - 1;
      if (t == total - 1) {
        if (next != 0) continue;
      } else {
        if (visited[next]) continue;
        // Must still be able to walk back to 0 and flip every unused bit
        // twice with the required spacing.
        int need = std::popcount(next);
        if (need > remaining || (remaining - need) % 2 != 0) continue;
      }
      bool fresh = first_flip[bit] < 0;
      if (fresh && t > total - 1 - target && t != total - 1) continue;
      int saved_last = last_flip[bit];
      last_flip[bit] = t;
      if (fresh) {
        first_flip[bit] = t;
        ++bits_used;
      }
      ++flip_count[bit];
      trans[t] = bit;
      dfs(next, t + 1);
      --flip_count[bit];
      if (fresh) {
        first_flip[bit] = -1;
        --bits_used;
      }
      last_flip[bit] = saved_last;
      if (stopped || budget_hit) break;
    }
    visited[col] = 0;
  }
};

}  // namespace

GraySearchResult search_long_run(int n, int target,
                                 unsigned long long budget) {
  if (n < 1 || n > 16 || target < 1 || budget < 1) {
    throw std::invalid_argument("search_long_run: bad arguments");
  }
  GraySearcher s;
  s.n = n;
  s.target = target;
  s.budget = budget;
  s.canonical = true;
  s.total = 1 << n;
  GraySearchResult result;
  s.emit = [&result](const GrayCode& code) {
    result.code = code;
    return false;
  };
  s.run();
  result.nodes = s.nodes;
  if (result.code) {
    result.status = SearchStatus::Found;
  } else {
    result.status = s.budget_hit ? SearchStatus::BudgetExceeded
                                 : SearchStatus::Exhausted;
  }
  return result;
}

GrayEnumeration enumerate_long_run(int n, int target, std::size_t max_codes,
                                   unsigned long long budget,
                                   bool canonical) {
  if (n < 1 || n > 16 || target < 1 || budget < 1) {
    throw std::invalid_argument("enumerate_long_run: bad arguments");
  }
  GraySearcher s;
  s.n = n;
  s.target = target;
  s.budget = budget;
  s.canonical = canonical;
  s.total = 1 << n;
  GrayEnumeration out;
  s.emit = [&out, max_codes](const GrayCode& code) {
    out.codes.push_back(code);
    return out.codes.size() < max_codes;
  };
  s.run();
  out.nodes = s.nodes;
  out.complete = !s.budget_hit && !s.stopped;
  return out;
}

PrefixMatrix prefix_matrix(const GrayCode& code, int m) {
  validate_gray(code);
  if (m < 0 || (std::size_t{1} << code.n) < static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("prefix_matrix: truncation longer than code");
  }
  std::vector<std::uint64_t> cols = gray_columns(code);
  PrefixMatrix M;
  M.n = code.n;
  M.m = m;
  M.cols.assign(cols.begin(), cols.begin() + m + 1);
  return M;
}

int best_min_run(int n) { return catalog_entry(n).best_min_run; }

const GrayCatalogEntry& catalog_entry(int n) {
  for (const GrayCatalogEntry& e : builtin_gray_catalog()) {
    if (e.n == n) return e;
  }
  throw std::out_of_range("gray catalog: width not searched");
}

std::vector<GrayCatalogEntry> compute_gray_catalog(
    int max_n, unsigned long long budget) {
  std::vector<GrayCatalogEntry> table;
  for (int n = 1; n <= max_n; ++n) {
    GrayCatalogEntry entry;
    entry.n = n;
    entry.budget = budget;
    // Budgeted search is not monotone in the target: a tighter target
    // prunes harder and can succeed where a looser one times out. Some
    // bit flips at least 2^n/n times, so no code has min run above n;
    // scan the whole range and keep the largest success. Only a true
    // exhaustion proof rules out every larger target.
    for (int target = 1; target <= std::max(n, 1); ++target) {
      GraySearchResult r = search_long_run(n, target, budget);
      if (r.status == SearchStatus::Found) {
        entry.best_min_run = target;
        entry.transitions = r.code->transitions;
      } else if (r.status == SearchStatus::Exhausted) {
        break;
      }
    }
    table.push_back(std::move(entry));
  }
  return table;
}

}  // namespace polyrep
