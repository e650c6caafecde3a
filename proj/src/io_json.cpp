#include "polyrep/io_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace polyrep {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed JSON");
  return j;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) {
    throw std::invalid_argument(std::string("field \"") + name +
                                "\" must be an integer");
  }
  return v.get<int>();
}

unsigned long long uint_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument(std::string("field \"") + name +
                                "\" must be a nonnegative integer");
  }
  return v.get<unsigned long long>();
}

std::string string_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_string()) {
    throw std::invalid_argument(std::string("field \"") + name +
                                "\" must be a string");
  }
  return v.get<std::string>();
}

std::vector<std::vector<int>> members_from_json(const json& v) {
  if (!v.is_array()) throw std::invalid_argument("members must be an array");
  std::vector<std::vector<int>> members;
  for (const json& mj : v) {
    if (!mj.is_array()) {
      throw std::invalid_argument("each member must be an array of integers");
    }
    std::vector<int> s;
    for (const json& e : mj) {
      if (!e.is_number_integer()) {
        throw std::invalid_argument("member elements must be integers");
      }
      s.push_back(e.get<int>());
    }
    members.push_back(std::move(s));
  }
  return members;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("cannot write " + path);
}

const char* mode_name(RepMode mode) {
  return mode == RepMode::Open ? "open" : "closed";
}

RepMode parse_mode(const std::string& name) {
  if (name == "open") return RepMode::Open;
  if (name == "closed") return RepMode::Closed;
  throw std::invalid_argument("mode must be \"open\" or \"closed\"");
}

const char* exact_mode_name(ExactMode mode) {
  return mode == ExactMode::Open ? "open" : "closed";
}

ExactMode parse_exact_mode(const std::string& name) {
  if (name == "open") return ExactMode::Open;
  if (name == "closed") return ExactMode::Closed;
  throw std::invalid_argument("mode must be \"open\" or \"closed\"");
}

std::string polygon_to_json(const Polygon& P) {
  json edges = json::array();
  for (const AffineForm& f : P.forms()) {
    edges.push_back(json{{"a1", format_scalar(f.a1)},
                         {"a2", format_scalar(f.a2)},
                         {"b", format_scalar(f.b)}});
  }
  json j{{"kind", P.kind() == PolygonKind::Bounded ? "bounded"
                                                   : "canonical_unbounded"},
         {"edges", std::move(edges)}};
  return dump(j);
}

Polygon polygon_from_json(const std::string& text) {
  json j = parse_json(text);
  std::string kind_name = string_field(j, "kind");
  PolygonKind kind;
  if (kind_name == "bounded") {
    kind = PolygonKind::Bounded;
  } else if (kind_name == "canonical_unbounded") {
    kind = PolygonKind::CanonicalUnbounded;
  } else {
    throw std::invalid_argument(
        "kind must be \"bounded\" or \"canonical_unbounded\"");
  }
  const json& edges = field(j, "edges");
  if (!edges.is_array()) throw std::invalid_argument("edges must be an array");
  std::vector<AffineForm> forms;
  for (const json& ej : edges) {
    AffineForm f;
    f.a1 = parse_scalar(string_field(ej, "a1"));
    f.a2 = parse_scalar(string_field(ej, "a2"));
    f.b = parse_scalar(string_field(ej, "b"));
    forms.push_back(std::move(f));
  }
  return make_polygon(std::move(forms), kind);
}

std::string representation_to_json(const ProductRep& rep,
                                   const std::vector<PolyTable>& expanded) {
  json family = json::array();
  for (const std::vector<int>& s : rep.members) family.push_back(s);
  json j{{"mode", mode_name(rep.mode)}, {"family", std::move(family)}};
  if (!expanded.empty()) {
    json tables = json::array();
    for (const PolyTable& t : expanded) {
      json rows = json::array();
      for (const std::vector<Scalar>& row : t.c) {
        json cells = json::array();
        for (const Scalar& v : row) cells.push_back(format_scalar(v));
        rows.push_back(std::move(cells));
      }
      tables.push_back(std::move(rows));
    }
    j["expanded"] = std::move(tables);
  }
  return dump(j);
}

ProductRep representation_from_json(const std::string& text) {
  json j = parse_json(text);
  ProductRep rep;
  rep.mode = parse_mode(string_field(j, "mode"));
  rep.members = members_from_json(field(j, "family"));
  if (j.contains("expanded")) {
    const json& tables = j.at("expanded");
    if (!tables.is_array()) {
      throw std::invalid_argument("expanded must be an array of tables");
    }
    for (const json& table : tables) {
      if (!table.is_array()) {
        throw std::invalid_argument("expanded entries must be arrays");
      }
    }
  }
  return rep;
}

std::string family_to_json(const SetFamily& fam) {
  json members = json::array();
  for (const std::vector<int>& s : fam.members) members.push_back(s);
  json j{{"m", fam.m}, {"members", std::move(members)}};
  return dump(j);
}

SetFamily family_from_json(const std::string& text) {
  json j = parse_json(text);
  SetFamily fam;
  fam.m = int_field(j, "m");
  fam.members = members_from_json(field(j, "members"));
  validate_family(fam);
  return fam;
}

std::string catalog_to_json(const std::vector<GrayCatalogEntry>& entries) {
  json arr = json::array();
  for (const GrayCatalogEntry& e : entries) {
    arr.push_back(json{{"n", e.n},
                       {"best_min_run", e.best_min_run},
                       {"budget", e.budget},
                       {"transitions", e.transitions}});
  }
  return dump(arr);
}

std::vector<GrayCatalogEntry> catalog_from_json(const std::string& text) {
  json arr = parse_json(text);
  if (!arr.is_array()) throw std::invalid_argument("catalog must be an array");
  std::vector<GrayCatalogEntry> entries;
  for (const json& ej : arr) {
    GrayCatalogEntry e;
    e.n = int_field(ej, "n");
    e.best_min_run = int_field(ej, "best_min_run");
    e.budget = uint_field(ej, "budget");
    const json& tj = field(ej, "transitions");
    if (!tj.is_array()) {
      throw std::invalid_argument("transitions must be an array");
    }
    for (const json& t : tj) {
      if (!t.is_number_integer()) {
        throw std::invalid_argument("transitions must hold integers");
      }
      e.transitions.push_back(t.get<int>());
    }
    validate_gray(GrayCode{e.n, e.transitions});
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string exact_cache_to_json(const std::vector<ExactCacheEntry>& cache) {
  json arr = json::array();
  for (const ExactCacheEntry& e : cache) {
    arr.push_back(json{{"m", e.m},
                       {"k", e.k},
                       {"mode", exact_mode_name(e.mode)},
                       {"n_min", e.n_min},
                       {"nodes", e.nodes}});
  }
  return dump(arr);
}

std::vector<ExactCacheEntry> exact_cache_from_json(const std::string& text) {
  json arr = parse_json(text);
  if (!arr.is_array()) throw std::invalid_argument("cache must be an array");
  std::vector<ExactCacheEntry> cache;
  for (const json& ej : arr) {
    ExactCacheEntry e;
    e.m = int_field(ej, "m");
    e.k = int_field(ej, "k");
    e.mode = parse_exact_mode(string_field(ej, "mode"));
    e.n_min = int_field(ej, "n_min");
    e.nodes = uint_field(ej, "nodes");
    cache.push_back(e);
  }
  return cache;
}

std::string bounds_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream out;
  out << "m,k,lower,achieved\n";
  for (const BoundsRow& r : rows) {
    out << r.m << ',' << r.k << ',' << r.lower << ',' << r.achieved << '\n';
  }
  return out.str();
}

std::string bounds_csv(const std::vector<BoundsRow>& rows,
                       const std::vector<std::optional<int>>& exact) {
  if (rows.size() != exact.size()) {
    throw std::invalid_argument("bounds_csv: rows and exact cells mismatch");
  }
  std::ostringstream out;
  out << "m,k,lower,achieved,n_exact\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const BoundsRow& r = rows[i];
    out << r.m << ',' << r.k << ',' << r.lower << ',' << r.achieved << ',';
    if (exact[i]) out << *exact[i];
    out << '\n';
  }
  return out.str();
}

std::string exact_csv(const std::vector<ExactCacheEntry>& cells) {
  std::ostringstream out;
  out << "m,k,mode,n_min,nodes\n";
  for (const ExactCacheEntry& e : cells) {
    out << e.m << ',' << e.k << ',' << exact_mode_name(e.mode) << ','
        << e.n_min << ',' << e.nodes << '\n';
  }
  return out.str();
}

}  // namespace polyrep
