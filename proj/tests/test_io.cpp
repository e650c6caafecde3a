#include <doctest.h>

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <polyrep/io_json.hpp>

using namespace polyrep;

namespace {

Polygon quadrant() {
  AffineForm x1{Scalar(1), Scalar(0), Scalar(0)};
  AffineForm x2{Scalar(0), Scalar(1), Scalar(0)};
  return make_polygon({x1, x2}, PolygonKind::CanonicalUnbounded);
}

Polygon triangle() {
  AffineForm x1{Scalar(1), Scalar(0), Scalar(0)};
  AffineForm x2{Scalar(0), Scalar(1), Scalar(0)};
  AffineForm cap{Scalar(-1), Scalar(-1), Scalar(1)};
  return make_polygon({x1, x2, cap}, PolygonKind::Bounded);
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(std::string(mode_name(RepMode::Open)) == "open");
  CHECK(std::string(mode_name(RepMode::Closed)) == "closed");
  CHECK(parse_mode("open") == RepMode::Open);
  CHECK(parse_mode("closed") == RepMode::Closed);
  CHECK_THROWS_AS(parse_mode("Open"), std::invalid_argument);
  CHECK_THROWS_AS(parse_mode(""), std::invalid_argument);

  CHECK(std::string(exact_mode_name(ExactMode::Open)) == "open");
  CHECK(std::string(exact_mode_name(ExactMode::Closed)) == "closed");
  CHECK(parse_exact_mode("closed") == ExactMode::Closed);
  CHECK_THROWS_AS(parse_exact_mode("shut"), std::invalid_argument);
}

TEST_CASE("polygon json round-trip") {
  for (const Polygon& P : {quadrant(), triangle()}) {
    std::string text = polygon_to_json(P);
    Polygon back = polygon_from_json(text);
    CHECK(back.kind() == P.kind());
    REQUIRE(back.edge_count() == P.edge_count());
    for (int i = P.min_edge_index(); i <= P.ground_m(); ++i) {
      CHECK(back.form_at(i).a1 == P.form_at(i).a1);
      CHECK(back.form_at(i).a2 == P.form_at(i).a2);
      CHECK(back.form_at(i).b == P.form_at(i).b);
    }
  }
}

TEST_CASE("polygon json rational fields") {
  AffineForm f{Scalar(1) / 3, Scalar(-2), Scalar(7) / 2};
  AffineForm g{Scalar(1), Scalar(1), Scalar(0)};
  Polygon P = make_polygon({f, g}, PolygonKind::CanonicalUnbounded);
  std::string text = polygon_to_json(P);
  CHECK(text.find("\"1/3\"") != std::string::npos);
  CHECK(text.find("\"-2\"") != std::string::npos);
  CHECK(text.find("\"7/2\"") != std::string::npos);
  CHECK(text.find("canonical_unbounded") != std::string::npos);
  Polygon back = polygon_from_json(text);
  CHECK(back.form_at(1).a1 == Scalar(1) / 3);
}

TEST_CASE("polygon json rejects malformed content") {
  CHECK_THROWS_AS(polygon_from_json("not json at all"),
                  std::invalid_argument);
  CHECK_THROWS_AS(polygon_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(polygon_from_json(R"({"kind": "bounded"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      polygon_from_json(R"({"kind": "oval", "edges": []})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      polygon_from_json(
          R"({"kind": "bounded", "edges": [{"a1": "1", "a2": "0"}]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      polygon_from_json(
          R"({"kind": "bounded", "edges": [{"a1": "1.5", "a2": "0", "b": "0"}]})"),
      std::invalid_argument);
  // Structurally fine, geometrically invalid: revalidation throws.
  CHECK_THROWS_AS(
      polygon_from_json(
          R"({"kind": "bounded", "edges": [
              {"a1": "1", "a2": "0", "b": "0"},
              {"a1": "0", "a2": "1", "b": "0"}]})"),
      PolygonError);
}

TEST_CASE("representation json round-trip") {
  ProductRep rep;
  rep.mode = RepMode::Closed;
  rep.members = {{1}, {1, 2}};
  std::string bare = representation_to_json(rep, {});
  CHECK(bare.find("expanded") == std::string::npos);
  ProductRep back = representation_from_json(bare);
  CHECK(back.mode == RepMode::Closed);
  CHECK(back.members == rep.members);

  std::vector<PolyTable> tables;
  tables.push_back(expand_product({AffineForm{Scalar(1), Scalar(0), Scalar(0)}}));
  tables.push_back(expand_product({AffineForm{Scalar(1), Scalar(0), Scalar(0)},
                                   AffineForm{Scalar(0), Scalar(1), Scalar(0)}}));
  std::string full = representation_to_json(rep, tables);
  CHECK(full.find("expanded") != std::string::npos);
  ProductRep back2 = representation_from_json(full);
  CHECK(back2.members == rep.members);
}

TEST_CASE("representation json rejects malformed content") {
  CHECK_THROWS_AS(representation_from_json("[]"), std::invalid_argument);
  CHECK_THROWS_AS(representation_from_json(R"({"mode": "open"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      representation_from_json(R"({"mode": "ajar", "family": []})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      representation_from_json(R"({"mode": "open", "family": [1]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      representation_from_json(R"({"mode": "open", "family": [["x"]]})"),
      std::invalid_argument);
  // Mis-shaped expanded tables are rejected even though the field is
  // otherwise ignored.
  CHECK_THROWS_AS(
      representation_from_json(
          R"({"mode": "open", "family": [[1]], "expanded": [[["1","0"],["0"]], 3]})"),
      std::invalid_argument);
}

TEST_CASE("family json round-trip") {
  SetFamily fam;
  fam.m = 7;
  fam.members = {{1, 3, 5, 7}, {2, 6}, {4}};
  SetFamily back = family_from_json(family_to_json(fam));
  CHECK(back.m == 7);
  CHECK(back.members == fam.members);

  CHECK_THROWS_AS(family_from_json(R"({"members": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(R"({"m": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(family_from_json(R"({"m": "2", "members": []})"),
                  std::invalid_argument);
}

TEST_CASE("catalog json round-trip") {
  const std::vector<GrayCatalogEntry>& table = builtin_gray_catalog();
  REQUIRE(!table.empty());
  std::string text = catalog_to_json(table);
  std::vector<GrayCatalogEntry> back = catalog_from_json(text);
  REQUIRE(back.size() == table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    CHECK(back[i].n == table[i].n);
    CHECK(back[i].best_min_run == table[i].best_min_run);
    CHECK(back[i].budget == table[i].budget);
    CHECK(back[i].transitions == table[i].transitions);
  }

  // Entries are validated as genuine cyclic codes on the way in.
  CHECK_THROWS_AS(
      catalog_from_json(
          R"([{"n": 1, "best_min_run": 1, "budget": 5, "transitions": [0, 1]}])"),
      std::invalid_argument);
  CHECK_THROWS_AS(catalog_from_json(R"({"entries": 1})"),
                  std::invalid_argument);
}

TEST_CASE("exact cache json round-trip") {
  std::vector<ExactCacheEntry> cache = {
      {7, 7, ExactMode::Open, 3, 8},
      {7, 7, ExactMode::Closed, 3, 8},
      {6, 2, ExactMode::Closed, 4, 19},
  };
  std::vector<ExactCacheEntry> back =
      exact_cache_from_json(exact_cache_to_json(cache));
  REQUIRE(back.size() == 3);
  CHECK(back[0].mode == ExactMode::Open);
  CHECK(back[1].mode == ExactMode::Closed);
  CHECK(back[2].m == 6);
  CHECK(back[2].n_min == 4);
  CHECK(back[2].nodes == 19);

  CHECK_THROWS_AS(exact_cache_from_json("3"), std::invalid_argument);
  CHECK_THROWS_AS(
      exact_cache_from_json(R"([{"m": 1, "k": 1, "mode": "open"}])"),
      std::invalid_argument);
}

TEST_CASE("csv formats") {
  std::vector<BoundsRow> rows = {{2, 1, 2, 2}, {2, 2, 2, 2}, {3, 1, 3, 3}};
  CHECK(bounds_csv(rows) ==
        "m,k,lower,achieved\n2,1,2,2\n2,2,2,2\n3,1,3,3\n");

  std::vector<std::optional<int>> exact = {2, std::nullopt, 3};
  CHECK(bounds_csv(rows, exact) ==
        "m,k,lower,achieved,n_exact\n2,1,2,2,2\n2,2,2,2,\n3,1,3,3,3\n");

  std::vector<ExactCacheEntry> cells = {{7, 7, ExactMode::Closed, 3, 8}};
  CHECK(exact_csv(cells) == "m,k,mode,n_min,nodes\n7,7,closed,3,8\n");
}

TEST_CASE("file io") {
  const char* path = "test_io_scratch.json";
  write_text_file(path, "hello\n");
  CHECK(read_text_file(path) == "hello\n");
  std::remove(path);

  CHECK_THROWS_AS(read_text_file("does_not_exist_anywhere.json"), IoError);
  CHECK_THROWS_AS(write_text_file("no_such_dir/x.json", "x"), IoError);
}

TEST_CASE("json output is stable byte-for-byte") {
  Polygon P = quadrant();
  CHECK(polygon_to_json(P) == polygon_to_json(P));
  std::string text = polygon_to_json(P);
  // Two-space indent, trailing newline, alphabetically ordered keys.
  CHECK(text.back() == '\n');
  CHECK(text.find("\"edges\"") < text.find("\"kind\""));
}
