#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyrep/construct.hpp"
#include "polyrep/gray_code.hpp"
#include "polyrep/minimize.hpp"
#include "polyrep/polygon.hpp"
#include "polyrep/product.hpp"
#include "polyrep/set_family.hpp"

namespace polyrep {

// Filesystem failure (open, read, write). Malformed content throws
// std::invalid_argument instead; the two map to different exit codes.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

const char* mode_name(RepMode mode);            // "open" / "closed"
RepMode parse_mode(const std::string& name);
const char* exact_mode_name(ExactMode mode);
ExactMode parse_exact_mode(const std::string& name);

// { "kind": "bounded"|"canonical_unbounded",
//   "edges": [ {"a1":"p/q","a2":"p/q","b":"p/q"}, ... ] }
// Rationals are decimal-free "p" or "p/q" strings.
std::string polygon_to_json(const Polygon& P);
// Revalidates through make_polygon; PolygonError propagates.
Polygon polygon_from_json(const std::string& text);

// { "mode": "open"|"closed", "family": [[1,3],[2],...],
//   "expanded": [ [["p/q",...],...], ... ] }    (field omitted when empty)
// expanded[i][d1][d2] is the x1^d1 x2^d2 coefficient of member i's product.
std::string representation_to_json(const ProductRep& rep,
                                   const std::vector<PolyTable>& expanded);
// Reads mode and family; any "expanded" field is shape-checked and dropped
// (verification recomputes products from the polygon).
ProductRep representation_from_json(const std::string& text);

// { "m": int, "members": [[int,...],...] }
std::string family_to_json(const SetFamily& fam);
SetFamily family_from_json(const std::string& text);

// Array of { "n", "best_min_run", "budget", "transitions" }.
std::string catalog_to_json(const std::vector<GrayCatalogEntry>& entries);
std::vector<GrayCatalogEntry> catalog_from_json(const std::string& text);

// Array of { "m", "k", "mode", "n_min", "nodes" }.
std::string exact_cache_to_json(const std::vector<ExactCacheEntry>& cache);
std::vector<ExactCacheEntry> exact_cache_from_json(const std::string& text);

// Header m,k,lower,achieved; with exact cells a fifth column n_exact,
// blank where not computed (parallel to rows).
std::string bounds_csv(const std::vector<BoundsRow>& rows);
std::string bounds_csv(const std::vector<BoundsRow>& rows,
                       const std::vector<std::optional<int>>& exact);

// Header m,k,mode,n_min,nodes.
std::string exact_csv(const std::vector<ExactCacheEntry>& cells);

}  // namespace polyrep
