#include "polyrep/prefix_matrix.hpp"

#include <bit>
#include <stdexcept>

namespace polyrep {

void validate_prefix(const PrefixMatrix& M) {
  if (M.n < 0 || M.n > 64) {
    throw std::invalid_argument("prefix matrix: row count outside 0..64");
  }
  if (M.m < 0 || M.cols.size() != static_cast<std::size_t>(M.m) + 1) {
    throw std::invalid_argument("prefix matrix: column count mismatch");
  }
  if (M.cols[0] != 0) {
    throw std::invalid_argument("prefix matrix: nonzero first column");
  }
  for (std::uint64_t c : M.cols) {
    if ((c & ~M.row_mask()) != 0) {
      throw std::invalid_argument("prefix matrix: bits above row count");
    }
  }
}

PrefixMatrix to_prefix(const SetFamily& fam) {
  validate_family(fam);
  if (fam.size() > 64) {
    throw std::invalid_argument("to_prefix: more than 64 members");
  }
  PrefixMatrix M;
  M.n = fam.size();
  M.m = fam.m;
  M.cols.assign(static_cast<std::size_t>(fam.m) + 1, 0);
  for (int i = 0; i < fam.size(); ++i) {
    // Walking j upward, the parity of |S_i ∩ {1..j}| flips exactly at the
    // odd-multiplicity elements of S_i.
    std::uint64_t bit = 1ull << i;
    const auto& member = fam.members[i];
    std::size_t pos = 0;
    std::uint64_t cur = 0;
    for (int j = 1; j <= fam.m; ++j) {
      int mult = 0;
      while (pos < member.size() && member[pos] == j) {
        ++mult;
        ++pos;
      }
      if (mult % 2 == 1) cur ^= bit;
      M.cols[j] |= cur;
    }
  }
  return M;
}

SetFamily from_prefix(const PrefixMatrix& M) {
  validate_prefix(M);
  SetFamily fam;
  fam.m = M.m;
  fam.members.resize(M.n);
  for (int j = 1; j <= M.m; ++j) {
    std::uint64_t delta = M.cols[j] ^ M.cols[j - 1];
    while (delta) {
      int row = std::countr_zero(delta);
      delta &= delta - 1;
      fam.members[row].push_back(j);
    }
  }
  return fam;
}

std::optional<std::pair<int, int>> check_I_prime_pair(const PrefixMatrix& M) {
  validate_prefix(M);
  for (int a = 0; a < M.m; ++a) {
    for (int b = a + 1; b <= M.m; ++b) {
      if (M.cols[a] == M.cols[b]) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool check_I_prime(const PrefixMatrix& M) {
  return !check_I_prime_pair(M).has_value();
}

std::optional<std::pair<int, int>> check_J_prime_pair(const PrefixMatrix& M) {
  validate_prefix(M);
  std::uint64_t mask = M.row_mask();
  for (int a = 0; a < M.m; ++a) {
    std::uint64_t A = M.cols[a == 0 ? 0 : a - 1];
    std::uint64_t B = M.cols[a];
    for (int b = a + 1; b <= M.m; ++b) {
      std::uint64_t C = M.cols[b];
      std::uint64_t D = M.cols[b == M.m ? M.m : b + 1];
      // Row r works iff A_r = B_r, C_r = D_r, B_r != C_r; all rows at once.
      std::uint64_t ok = ~(A ^ B) & ~(C ^ D) & (B ^ C) & mask;
      if (ok == 0) return std::make_pair(a, b);
    }
  }
  return std::nullopt;
}

bool check_J_prime(const PrefixMatrix& M) {
  return !check_J_prime_pair(M).has_value();
}

std::optional<int> check_K_prime_row(const PrefixMatrix& M, int k) {
  if (k < 1) throw std::invalid_argument("check_K_prime: k < 1");
  validate_prefix(M);
  for (int row = 1; row <= M.n; ++row) {
    if (row_changes(M, row) > k) return row;
  }
  return std::nullopt;
}

bool check_K_prime(const PrefixMatrix& M, int k) {
  return !check_K_prime_row(M, k).has_value();
}

int row_changes(const PrefixMatrix& M, int row) {
  if (row < 1 || row > M.n) {
    throw std::invalid_argument("row_changes: row outside 1..n");
  }
  std::uint64_t bit = 1ull << (row - 1);
  int changes = 0;
  for (int j = 1; j <= M.m; ++j) {
    if (((M.cols[j] ^ M.cols[j - 1]) & bit) != 0) ++changes;
  }
  return changes;
}

std::vector<std::string> prefix_rows(const PrefixMatrix& M) {
  validate_prefix(M);
  std::vector<std::string> rows(M.n);
  for (int i = 0; i < M.n; ++i) {
    std::string& r = rows[i];
    r.resize(static_cast<std::size_t>(M.m) + 1);
    for (int j = 0; j <= M.m; ++j) {
      r[j] = ((M.cols[j] >> i) & 1) ? '1' : '0';
    }
  }
  return rows;
}

PrefixMatrix prefix_from_rows(const std::vector<std::string>& rows) {
  PrefixMatrix M;
  M.n = static_cast<int>(rows.size());
  if (M.n > 64) throw std::invalid_argument("prefix rows: more than 64 rows");
  if (rows.empty()) {
    M.m = 0;
    M.cols.assign(1, 0);
    return M;
  }
  M.m = static_cast<int>(rows[0].size()) - 1;
  if (M.m < 0) throw std::invalid_argument("prefix rows: empty row string");
  M.cols.assign(static_cast<std::size_t>(M.m) + 1, 0);
  for (int i = 0; i < M.n; ++i) {
    if (rows[i].size() != static_cast<std::size_t>(M.m) + 1) {
      throw std::invalid_argument("prefix rows: ragged row lengths");
    }
    for (int j = 0; j <= M.m; ++j) {
      char c = rows[i][j];
      if (c != '0' && c != '1') {
        throw std::invalid_argument("prefix rows: non-binary character");
      }
      if (c == '1') M.cols[j] |= 1ull << i;
    }
  }
  validate_prefix(M);
  return M;
}

}  // namespace polyrep
