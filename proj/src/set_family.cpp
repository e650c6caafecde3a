#include "polyrep/set_family.hpp"

#include <algorithm>
#include <stdexcept>

#include "polyrep/prefix_matrix.hpp"

namespace polyrep {

void validate_family(const SetFamily& fam) {
  if (fam.m < 0) throw std::invalid_argument("family: negative m");
  for (const auto& member : fam.members) {
    if (!std::is_sorted(member.begin(), member.end())) {
      throw std::invalid_argument("family: member not sorted");
    }
    for (int e : member) {
      if (e < 1 || e > fam.m) {
        throw std::invalid_argument("family: element outside 1..m");
      }
    }
  }
}

SetFamily normalize_family(SetFamily fam) {
  for (auto& member : fam.members) {
    std::sort(member.begin(), member.end());
  }
  return fam;
}

namespace {

// Elements of odd multiplicity, sorted. Assumes the member is sorted.
std::vector<int> odd_support(const std::vector<int>& member) {
  std::vector<int> out;
  for (std::size_t i = 0; i < member.size();) {
    std::size_t j = i;
    while (j < member.size() && member[j] == member[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(member[i]);
    i = j;
  }
  return out;
}

}  // namespace

SetFamily simplify_family(const SetFamily& fam) {
  validate_family(fam);
  SetFamily out;
  out.m = fam.m;
  for (const auto& member : fam.members) {
    std::vector<int> reduced = odd_support(member);
    if (!reduced.empty()) out.members.push_back(std::move(reduced));
  }
  return out;
}

std::optional<IntervalViolation> check_I(const SetFamily& fam) {
  validate_family(fam);
  PrefixMatrix M = to_prefix(fam);
  // Interval {a..b} has all-even intersections iff prefix columns a-1 and
  // b coincide. Scan in interval order to report the first violation.
  for (int a = 1; a <= fam.m; ++a) {
    std::uint64_t left = M.cols[a - 1];
    for (int b = a; b <= fam.m; ++b) {
      if (M.cols[b] == left) return IntervalViolation{a, b};
    }
  }
  return std::nullopt;
}

std::optional<IntervalViolation> check_J(const SetFamily& fam) {
  validate_family(fam);
  PrefixMatrix M = to_prefix(fam);
  // Interval {a..b} maps to the column pair (a-1, b).
  if (auto pair = check_J_prime_pair(M)) {
    return IntervalViolation{pair->first + 1, pair->second};
  }
  return std::nullopt;
}

std::optional<int> check_K(const SetFamily& fam, int k) {
  if (k < 1) throw std::invalid_argument("check_K: k < 1");
  validate_family(fam);
  for (int i = 0; i < fam.size(); ++i) {
    if (static_cast<int>(odd_support(fam.members[i]).size()) > k) {
      return i + 1;
    }
  }
  return std::nullopt;
}

bool covers_all(const SetFamily& fam) {
  validate_family(fam);
  std::vector<char> seen(static_cast<std::size_t>(fam.m) + 1, 0);
  for (const auto& member : fam.members) {
    for (int e : member) seen[e] = 1;
  }
  for (int e = 1; e <= fam.m; ++e) {
    if (!seen[e]) return false;
  }
  return true;
}

std::string format_family(const SetFamily& fam) {
  std::string out = "{";
  for (int i = 0; i < fam.size(); ++i) {
    out += i ? ", {" : "{";
    for (std::size_t j = 0; j < fam.members[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(fam.members[i][j]);
    }
    out += "}";
  }
  out += "}";
  return out;
}

namespace detail {

std::optional<IntervalViolation> check_I_naive(const SetFamily& fam) {
  SetFamily f = simplify_family(fam);
  for (int a = 1; a <= f.m; ++a) {
    for (int b = a; b <= f.m; ++b) {
      bool hit = false;
      for (const auto& member : f.members) {
        int count = 0;
        for (int e : member) {
          if (a <= e && e <= b) ++count;
        }
        if (count % 2 == 1) {
          hit = true;
          break;
        }
      }
      if (!hit) return IntervalViolation{a, b};
    }
  }
  return std::nullopt;
}

std::optional<IntervalViolation> check_J_naive(const SetFamily& fam) {
  SetFamily f = simplify_family(fam);
  for (int a = 1; a <= f.m; ++a) {
    for (int b = a; b <= f.m; ++b) {
      bool hit = false;
      for (const auto& member : f.members) {
        int count = 0;
        bool touches_neighbor = false;
        for (int e : member) {
          if (a <= e && e <= b) ++count;
          if (e == a - 1 || e == b + 1) touches_neighbor = true;
        }
        if (count % 2 == 1 && !touches_neighbor) {
          hit = true;
          break;
        }
      }
      if (!hit) return IntervalViolation{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace detail

}  // namespace polyrep
