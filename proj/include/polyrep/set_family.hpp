#pragma once

#include <optional>
#include <string>
#include <vector>

namespace polyrep {

// Family of subsets of the ground set {1..m}. Members keep multiplicities
// until simplify_family parity-reduces them; the interval checks below
// require squarefree (set) members and simplify their input first.
// m = 0 and empty members are legal here; geometry rejects them upstream.
struct SetFamily {
  int m = 0;
  std::vector<std::vector<int>> members;

  int size() const { return static_cast<int>(members.size()); }

  bool operator==(const SetFamily& other) const = default;
};

struct IntervalViolation {
  int a = 0;
  int b = 0;

  bool operator==(const IntervalViolation& other) const = default;
};

// Throws std::invalid_argument unless m >= 0, every element lies in 1..m,
// and every member is sorted ascending (repeats allowed).
void validate_family(const SetFamily& fam);

// Sorts each member ascending. Multiplicities preserved.
SetFamily normalize_family(SetFamily fam);

// Drops even-multiplicity elements from each member, then drops members
// that became empty. Never increases any cardinality; idempotent.
// Squares of edge functions never change the sign class of a product at
// any point of the plane, so representations keep their verdict.
SetFamily simplify_family(const SetFamily& fam);

// Interval condition: every interval {a..b} within 1..m meets some member
// in an odd number of elements. Returns the lexicographically first
// (a, then b) violating interval, or nullopt on pass.
std::optional<IntervalViolation> check_I(const SetFamily& fam);

// Strengthened interval condition: the odd-meeting member must also be
// disjoint from {a-1, b+1}. Same reporting order.
std::optional<IntervalViolation> check_J(const SetFamily& fam);

// Cardinality budget: every member has at most k elements (counted after
// parity reduction). Returns the 1-based index of the first offender.
std::optional<int> check_K(const SetFamily& fam, int k);

// True iff the union of the members is all of {1..m}.
bool covers_all(const SetFamily& fam);

std::string format_family(const SetFamily& fam);

namespace detail {

// Literal restatements of the interval conditions, quadratic in m and
// linear in the family, kept free of the prefix-parity tables so the two
// routes can be cross-checked against each other.
std::optional<IntervalViolation> check_I_naive(const SetFamily& fam);
std::optional<IntervalViolation> check_J_naive(const SetFamily& fam);

}  // namespace detail

}  // namespace polyrep
