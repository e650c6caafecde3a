#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

using std::string;

namespace {

struct RunResult {
  int exit_code = -1;
  string out;
};

RunResult run(const string& args) {
  string cmd = string(POLYREP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = status >= 256 ? status / 256 : status;
  return r;
}

void write_file(const string& path, const string& text) {
  FILE* f = fopen(path.c_str(), "w");
  REQUIRE(f);
  fwrite(text.data(), 1, text.size(), f);
  fclose(f);
}

string read_file(const string& path) {
  FILE* f = fopen(path.c_str(), "r");
  REQUIRE(f);
  string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
  fclose(f);
  return out;
}

const char* kQuadrant = R"({
  "kind": "canonical_unbounded",
  "edges": [
    {"a1": "1", "a2": "0", "b": "0"},
    {"a1": "0", "a2": "1", "b": "0"}
  ]
})";

const char* kTriangle = R"({
  "kind": "bounded",
  "edges": [
    {"a1": "1", "a2": "0", "b": "0"},
    {"a1": "0", "a2": "1", "b": "0"},
    {"a1": "-1", "a2": "-1", "b": "1"}
  ]
})";

bool contains(const string& hay, const string& needle) {
  return hay.find(needle) != string::npos;
}

}  // namespace

TEST_CASE("cli represent") {
  write_file("cli_quad.json", kQuadrant);
  RunResult r = run("represent cli_quad.json cli_quad_rep.json --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n=2 (lower bound 2)\n");
  string rep = read_file("cli_quad_rep.json");
  CHECK(contains(rep, "\"mode\": \"closed\""));
  CHECK(contains(rep, "\"family\""));
  CHECK(contains(rep, "\"expanded\""));

  RunResult v = run("verify cli_quad.json cli_quad_rep.json --deterministic");
  CHECK(v.exit_code == 0);

  std::remove("cli_quad.json");
  std::remove("cli_quad_rep.json");
}

TEST_CASE("cli represent bounded triangle") {
  write_file("cli_tri.json", kTriangle);
  RunResult r = run("represent cli_tri.json cli_tri_rep.json --k 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n=3 (lower bound 3)\n");

  RunResult v = run("verify cli_tri.json cli_tri_rep.json --deterministic");
  CHECK(v.exit_code == 0);
  // Bounded polygons have no exact reduction; only the sampled line.
  CHECK(!contains(v.out, "exact:"));
  CHECK(contains(v.out, "sampled: Pass"));

  std::remove("cli_tri.json");
  std::remove("cli_tri_rep.json");
}

TEST_CASE("cli verify pass and fail") {
  write_file("cli_quad.json", kQuadrant);
  write_file("cli_rep_good.json",
             "{\"mode\": \"closed\", \"family\": [[1],[2]]}");
  write_file("cli_rep_bad.json",
             "{\"mode\": \"closed\", \"family\": [[1],[1,2]]}");

  RunResult good = run("verify cli_quad.json cli_rep_good.json --deterministic");
  CHECK(good.exit_code == 0);
  CHECK(contains(good.out, "exact: Pass\n"));
  CHECK(contains(good.out, "sampled: Pass ("));
  CHECK(contains(good.out, " points)\n"));
  CHECK(good.out.substr(good.out.size() - 5) == "Pass\n");

  RunResult bad = run("verify cli_quad.json cli_rep_bad.json --deterministic");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "exact: Fail\n"));
  CHECK(contains(bad.out, "sampled: Fail"));
  CHECK(contains(bad.out,
                 "counterexample: (0, -1) [exterior] products: 0 0\n"));
  CHECK(bad.out.substr(bad.out.size() - 5) == "Fail\n");

  // Extra seeded samples only ever add points.
  RunResult seeded = run("verify cli_quad.json cli_rep_good.json --seed 7");
  CHECK(seeded.exit_code == 0);
  CHECK(contains(seeded.out, "sampled: Pass ("));

  std::remove("cli_quad.json");
  std::remove("cli_rep_good.json");
  std::remove("cli_rep_bad.json");
}

TEST_CASE("cli exact") {
  RunResult r = run("exact 7 7 open");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n=3\n"));
  CHECK(contains(r.out, "witness: {{1,3,5,7}, {2,6}, {4}}\n"));
  CHECK(contains(r.out, "nodes=8 seconds="));

  std::remove("cli_cache.json");
  RunResult first = run("exact 5 2 closed --cache cli_cache.json");
  CHECK(first.exit_code == 0);
  CHECK(contains(first.out, "n=3\n"));
  CHECK(!contains(first.out, "cached"));
  RunResult second = run("exact 5 2 closed --cache cli_cache.json");
  CHECK(second.exit_code == 0);
  CHECK(contains(second.out, "n=3\ncached ("));
  string cache = read_file("cli_cache.json");
  CHECK(contains(cache, "\"mode\": \"closed\""));
  CHECK(contains(cache, "\"n_min\": 3"));
  std::remove("cli_cache.json");

  // A one-node budget cannot finish and reports the open bracket.
  RunResult capped = run("exact 12 2 closed --budget 1");
  CHECK(capped.exit_code == 4);
  CHECK(contains(capped.out, "n in [6, 12]"));
}

TEST_CASE("cli bounds") {
  RunResult r = run("bounds 2..4 1..2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "m,k,lower,achieved\n"
        "2,1,2,2\n"
        "2,2,2,2\n"
        "3,1,3,3\n"
        "3,2,2,2\n"
        "4,1,4,4\n"
        "4,2,3,3\n");

  RunResult exact = run("bounds 2..3 1..2 --exact");
  CHECK(exact.exit_code == 0);
  CHECK(exact.out ==
        "m,k,lower,achieved,n_exact\n"
        "2,1,2,2,2\n"
        "2,2,2,2,2\n"
        "3,1,3,3,3\n"
        "3,2,2,2,2\n");

  RunResult to_file = run("bounds 2..2 1..1 -o cli_bounds.csv");
  CHECK(to_file.exit_code == 0);
  CHECK(read_file("cli_bounds.csv") == "m,k,lower,achieved\n2,1,2,2\n");
  std::remove("cli_bounds.csv");
}

TEST_CASE("cli gray") {
  RunResult r = run("gray 3 2");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "code: 000 001 011 010 110 111 101 100 \n"));
  CHECK(contains(r.out, "transitions: 1 2 1 3 1 2 1 3 \n"));
  CHECK(contains(r.out, "runs bit 1: 2 2 2 2 \n"));
  CHECK(contains(r.out, "min run: 2\n"));

  RunResult none = run("gray 3 3");
  CHECK(none.exit_code == 0);
  CHECK(none.out == "no 3-bit code with min run >= 3\n");

  RunResult capped = run("gray 6 5 --budget 10");
  CHECK(capped.exit_code == 4);
  CHECK(contains(capped.out, "budget exceeded after"));
}

TEST_CASE("cli plot") {
  write_file("cli_quad.json", kQuadrant);
  write_file("cli_rep_good.json",
             "{\"mode\": \"closed\", \"family\": [[1],[2]]}");
  RunResult r = run(
      "plot cli_quad.json cli_rep_good.json -o cli_plot.svg --grid 32");
  CHECK(r.exit_code == 0);
  string svg = read_file("cli_plot.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(contains(svg, "</svg>"));
  CHECK(contains(svg, "stroke-dasharray"));

  RunResult windowed = run(
      "plot cli_quad.json cli_rep_good.json -o cli_plot.svg "
      "--window -1,-1,3,3 --grid 16");
  CHECK(windowed.exit_code == 0);

  std::remove("cli_quad.json");
  std::remove("cli_rep_good.json");
  std::remove("cli_plot.svg");
}

TEST_CASE("cli error exits") {
  // Missing file: i/o failure.
  RunResult missing = run("verify cli_no_such.json cli_no_such2.json");
  CHECK(missing.exit_code == 3);
  CHECK(contains(missing.out, "error: cannot open"));

  // Malformed JSON: invalid input.
  write_file("cli_bad.json", "nope{");
  write_file("cli_rep_good.json",
             "{\"mode\": \"closed\", \"family\": [[1],[2]]}");
  RunResult bad = run("verify cli_bad.json cli_rep_good.json");
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.out, "error: malformed JSON"));

  // Structurally valid JSON, invalid polygon.
  write_file("cli_badpoly.json",
             R"({"kind": "bounded", "edges": [
                 {"a1": "1", "a2": "0", "b": "0"},
                 {"a1": "0", "a2": "1", "b": "0"}]})");
  RunResult poly = run("verify cli_badpoly.json cli_rep_good.json");
  CHECK(poly.exit_code == 2);
  CHECK(contains(poly.out, "error:"));

  // Representation index outside the ground range.
  write_file("cli_quad.json", kQuadrant);
  write_file("cli_rep_oob.json",
             "{\"mode\": \"closed\", \"family\": [[1],[9]]}");
  RunResult oob = run("verify cli_quad.json cli_rep_oob.json");
  CHECK(oob.exit_code == 2);

  // Unknown flags and bad values are usage errors.
  RunResult usage = run("exact 0 1 open");
  CHECK(usage.exit_code == 2);
  RunResult badrange = run("bounds 4..2 1..1");
  CHECK(badrange.exit_code == 2);

  std::remove("cli_bad.json");
  std::remove("cli_badpoly.json");
  std::remove("cli_quad.json");
  std::remove("cli_rep_good.json");
  std::remove("cli_rep_oob.json");
}

TEST_CASE("cli graytable") {
  RunResult r = run("graytable --n-max 3 --budget 100000");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "n=1 best_min_run=1\n"));
  CHECK(contains(r.out, "n=2 best_min_run=2\n"));
  CHECK(contains(r.out, "n=3 best_min_run=2\n"));

  RunResult out = run("graytable --n-max 2 --budget 100000 -o cli_cat.json");
  CHECK(out.exit_code == 0);
  string cat = read_file("cli_cat.json");
  CHECK(contains(cat, "\"best_min_run\""));
  CHECK(contains(cat, "\"transitions\""));
  std::remove("cli_cat.json");
}
