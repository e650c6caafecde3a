#include "polyrep/gray_code.hpp"

namespace polyrep {

// Frozen output of `polyrep graytable --n-max 7 --budget 200000000`,
// kept in sync with data/gray_catalog.json. Transitions are 0-based
// bit indices; each entry is the deepest minimum run length the
// budgeted search certified at that width.
const std::vector<GrayCatalogEntry>& builtin_gray_catalog() {
  static const std::vector<GrayCatalogEntry> table = {
      {1,
       1,
       200000000,
       {0, 0}},
      {2,
       2,
       200000000,
       {0, 1, 0, 1}},
      {3,
       2,
       200000000,
       {0, 1, 0, 2, 0, 1, 0, 2}},
      {4,
       2,
       200000000,
       {0, 1, 0, 2, 0, 1, 0, 3, 0, 1, 0, 2, 0, 1, 0, 3}},
      {5,
       4,
       200000000,
       {0, 1, 2, 3, 0, 1, 2, 4, 0, 3, 2, 1, 0, 3, 2, 4,
        0, 1, 2, 3, 0, 1, 2, 4, 0, 3, 2, 1, 0, 3, 2, 4}},
      {6,
       4,
       200000000,
       {0, 1, 2, 3, 0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 5,
        0, 1, 2, 3, 0, 1, 2, 4, 0, 1, 2, 3, 0, 4, 2, 3,
        0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 5, 0, 1, 2, 3,
        0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 5, 0, 4, 2, 5}},
      {7,
       4,
       200000000,
       {0, 1, 2, 3, 0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 5,
        0, 1, 2, 3, 0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 6,
        0, 1, 2, 3, 0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 5,
        0, 1, 2, 3, 0, 1, 2, 4, 0, 1, 2, 3, 0, 4, 2, 3,
        0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 5, 0, 1, 2, 3,
        0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 6, 0, 1, 2, 3,
        0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 5, 0, 1, 2, 3,
        0, 1, 2, 4, 0, 1, 2, 3, 0, 1, 2, 6, 0, 4, 2, 6}},
  };
  return table;
}

}  // namespace polyrep
