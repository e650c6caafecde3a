#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyrep/construct.hpp"
#include "polyrep/gray_code.hpp"
#include "polyrep/io_json.hpp"
#include "polyrep/minimize.hpp"
#include "polyrep/polygon.hpp"
#include "polyrep/product.hpp"
#include "polyrep/svg.hpp"
#include "polyrep/witnesses.hpp"

namespace {

using namespace polyrep;

// Exit contract: 0 success, 1 verification failure, 2 invalid input,
// 3 I/O failure, 4 budget exceeded.
constexpr int kExitVerifyFail = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitIo = 3;
constexpr int kExitBudget = 4;

struct Config {
  std::string polygon_path;
  std::string rep_path;
  std::string out_path;
  std::string cache_path;
  std::string mode_name = "closed";
  std::string window;
  std::string m_range;
  std::string k_range;
  int k = 1;
  int n = 0;
  int target = 0;
  int grid = 256;
  int max_n = 7;
  unsigned long long budget = 0;
  unsigned long long seed = 0;
  bool deterministic = false;
  bool with_exact = false;
};

struct Range {
  int lo = 0;
  int hi = 0;
};

// "a..b" or a single "a".
Range parse_range(const std::string& text) {
  Range r;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("range must be \"a\" or \"a..b\": " + text);
  }
  if (r.lo < 1 || r.hi < r.lo) {
    throw std::invalid_argument("range must satisfy 1 <= lo <= hi: " + text);
  }
  return r;
}

std::array<Scalar, 4> parse_window(const std::string& text) {
  std::array<Scalar, 4> w;
  std::istringstream in(text);
  std::string cell;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(in, cell, ',')) {
      throw std::invalid_argument("window must be x0,y0,x1,y1");
    }
    w[i] = parse_scalar(cell);
  }
  if (std::getline(in, cell, ',')) {
    throw std::invalid_argument("window must have exactly four coordinates");
  }
  return w;
}

std::string point_text(const Point& p) {
  return "(" + format_scalar(p.x) + ", " + format_scalar(p.y) + ")";
}

int cmd_represent(const Config& cfg) {
  Polygon P = polygon_from_json(read_text_file(cfg.polygon_path));
  RepMode mode = parse_mode(cfg.mode_name);
  unsigned long long budget =
      cfg.budget ? cfg.budget : kDefaultConstructBudget;
  ProductRep rep = construct_representation(P, cfg.k, mode, budget);
  std::vector<PolyTable> expanded;
  for (const std::vector<int>& member : rep.members) {
    std::vector<AffineForm> factors;
    for (int i : member) factors.push_back(P.form_at(i));
    expanded.push_back(expand_product(factors));
  }
  write_text_file(cfg.out_path, representation_to_json(rep, expanded));
  // Every edge must appear in some member, so member count is at least
  // edge_count/k; for canonical unbounded polygons the column bound
  // sharpens this.
  int lower = P.kind() == PolygonKind::Bounded
                  ? (P.edge_count() + cfg.k - 1) / cfg.k
                  : lower_bound_n(P.ground_m(), cfg.k);
  std::printf("n=%d (lower bound %d)\n", static_cast<int>(rep.members.size()),
              lower);
  return 0;
}

int cmd_verify(const Config& cfg) {
  Polygon P = polygon_from_json(read_text_file(cfg.polygon_path));
  ProductRep rep = representation_from_json(read_text_file(cfg.rep_path));
  validate_rep(P, rep);
  std::optional<bool> exact = verify_exact(P, rep);
  std::vector<SamplePoint> samples = sample_witnesses(P);
  if (cfg.seed != 0 && !cfg.deterministic) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long long> num(-4096, 4096);
    for (int i = 0; i < 200; ++i) {
      Point p;
      p.x = make_scalar(num(rng), 64);
      p.y = make_scalar(num(rng), 64);
      samples.push_back(SamplePoint{p, classify(P, p)});
    }
  }
  VerifyReport report = verify_sampled(P, rep, samples);
  if (exact) {
    std::printf("exact: %s\n", *exact ? "Pass" : "Fail");
  }
  std::printf("sampled: %s (%zu points)\n", report.pass ? "Pass" : "Fail",
              report.points_checked);
  bool pass = report.pass && (!exact || *exact);
  if (pass) {
    std::printf("Pass\n");
    return 0;
  }
  if (report.counterexample) {
    const SamplePoint& cx = *report.counterexample;
    std::string values;
    for (const Scalar& v : report.counterexample_values) {
      values += ' ' + format_scalar(v);
    }
    std::printf("counterexample: %s [%s] products:%s\n",
                point_text(cx.p).c_str(), membership_name(cx.tag),
                values.c_str());
  }
  if (!report.covers) {
    std::printf("uncovered: some edge appears in no member\n");
  }
  std::printf("Fail\n");
  return kExitVerifyFail;
}

int cmd_bounds(const Config& cfg) {
  Range mr = parse_range(cfg.m_range);
  Range kr = parse_range(cfg.k_range);
  unsigned long long budget =
      cfg.budget ? cfg.budget : kDefaultConstructBudget;
  std::vector<BoundsRow> rows =
      bounds_table(mr.lo, mr.hi, kr.lo, kr.hi, budget);
  std::string csv;
  bool partial = false;
  if (cfg.with_exact) {
    std::vector<std::optional<int>> exact(rows.size());
    unsigned long long exact_budget =
        cfg.budget ? cfg.budget : kDefaultExactBudget;
    for (std::size_t i = 0; i < rows.size() && !partial; ++i) {
      ExactOutcome out = exact_n(rows[i].m, rows[i].k, ExactMode::Closed,
                                 exact_budget);
      if (out.status == SearchStatus::Found) {
        exact[i] = out.result->n_min;
      } else {
        partial = true;  // later cells stay blank
      }
    }
    csv = bounds_csv(rows, exact);
  } else {
    csv = bounds_csv(rows);
  }
  if (cfg.out_path.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text_file(cfg.out_path, csv);
  }
  if (partial) {
    std::fprintf(stderr, "budget exceeded: exact column incomplete\n");
    return kExitBudget;
  }
  return 0;
}

int cmd_exact(const Config& cfg) {
  ExactMode mode = parse_exact_mode(cfg.mode_name);
  unsigned long long budget = cfg.budget ? cfg.budget : kDefaultExactBudget;
  std::vector<ExactCacheEntry> cache;
  if (!cfg.cache_path.empty()) {
    try {
      cache = exact_cache_from_json(read_text_file(cfg.cache_path));
    } catch (const IoError&) {
      // Missing cache file: start empty.
    }
  }
  if (auto hit = cache_lookup(cache, cfg.n, cfg.k, mode)) {
    std::printf("n=%d\n", hit->n_min);
    std::printf("cached (%llu nodes)\n", hit->nodes);
    return 0;
  }
  ExactOutcome out = exact_n(cfg.n, cfg.k, mode, budget);
  if (out.status == SearchStatus::BudgetExceeded) {
    std::printf("n in [%d, %d] (budget exceeded after %llu nodes)\n", out.lo,
                out.hi, out.nodes);
    return kExitBudget;
  }
  const ExactResult& res = *out.result;
  std::printf("n=%d\n", res.n_min);
  std::printf("witness: %s\n", format_family(res.witness).c_str());
  std::printf("nodes=%llu seconds=%.3f\n", res.stats.nodes, res.stats.seconds);
  if (!cfg.cache_path.empty()) {
    cache_store(cache, ExactCacheEntry{cfg.n, cfg.k, mode, res.n_min,
                                       res.stats.nodes});
    write_text_file(cfg.cache_path, exact_cache_to_json(cache));
  }
  return 0;
}

// Bits print 1-based to match the matrix row convention.
int cmd_gray(const Config& cfg) {
  unsigned long long budget = cfg.budget ? cfg.budget : kDefaultGrayBudget;
  GraySearchResult r = search_long_run(cfg.n, cfg.target, budget);
  if (r.status == SearchStatus::BudgetExceeded) {
    std::printf("budget exceeded after %llu nodes\n", r.nodes);
    return kExitBudget;
  }
  if (r.status == SearchStatus::Exhausted) {
    std::printf("no %d-bit code with min run >= %d\n", cfg.n, cfg.target);
    return 0;
  }
  const GrayCode& code = *r.code;
  std::string cols;
  for (std::uint64_t c : gray_columns(code)) {
    for (int b = code.n - 1; b >= 0; --b) {
      cols += (c >> b) & 1 ? '1' : '0';
    }
    cols += ' ';
  }
  std::printf("code: %s\n", cols.c_str());
  std::string trans;
  for (int t : code.transitions) trans += std::to_string(t + 1) + " ";
  std::printf("transitions: %s\n", trans.c_str());
  RunProfile prof = run_profile(code);
  for (int b = 0; b < code.n; ++b) {
    std::string gaps;
    for (int g : prof.runs[b]) gaps += std::to_string(g) + " ";
    std::printf("runs bit %d: %s\n", b + 1, gaps.c_str());
  }
  std::printf("min run: %d\n", prof.min_run);
  return 0;
}

int cmd_graytable(const Config& cfg) {
  unsigned long long budget = cfg.budget ? cfg.budget : kDefaultGrayBudget;
  std::vector<GrayCatalogEntry> entries =
      compute_gray_catalog(cfg.max_n, budget);
  for (const GrayCatalogEntry& e : entries) {
    std::printf("n=%d best_min_run=%d\n", e.n, e.best_min_run);
  }
  if (!cfg.out_path.empty()) {
    write_text_file(cfg.out_path, catalog_to_json(entries));
  }
  return 0;
}

int cmd_plot(const Config& cfg) {
  Polygon P = polygon_from_json(read_text_file(cfg.polygon_path));
  ProductRep rep = representation_from_json(read_text_file(cfg.rep_path));
  PlotOptions opt;
  opt.grid = cfg.grid;
  if (!cfg.window.empty()) opt.window = parse_window(cfg.window);
  write_text_file(cfg.out_path, render_svg(P, rep, opt));
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Polygon representations by products of affine functions"};
  app.require_subcommand(1);
  Config cfg;

  CLI::App* represent =
      app.add_subcommand("represent", "Construct a product representation");
  represent->add_option("polygon", cfg.polygon_path, "Polygon JSON file")
      ->required();
  represent->add_option("output", cfg.out_path, "Representation JSON output")
      ->required();
  represent->add_option("--k", cfg.k, "Max factors per product")
      ->check(CLI::PositiveNumber);
  represent->add_option("--mode", cfg.mode_name, "open or closed");
  represent->add_option("--budget", cfg.budget, "Search node budget");

  CLI::App* verify =
      app.add_subcommand("verify", "Verify a representation against a polygon");
  verify->add_option("polygon", cfg.polygon_path, "Polygon JSON file")
      ->required();
  verify->add_option("representation", cfg.rep_path, "Representation JSON file")
      ->required();
  verify->add_option("--seed", cfg.seed, "Extra random sample points");
  verify->add_flag("--deterministic", cfg.deterministic,
                   "Structured samples only");

  CLI::App* bounds = app.add_subcommand("bounds", "Bounds table CSV");
  bounds->add_option("m_range", cfg.m_range, "m range a..b")->required();
  bounds->add_option("k_range", cfg.k_range, "k range a..b")->required();
  bounds->add_option("-o,--output", cfg.out_path, "CSV file (default stdout)");
  bounds->add_flag("--exact", cfg.with_exact, "Add exact n column");
  bounds->add_option("--budget", cfg.budget, "Search node budget");

  CLI::App* exact = app.add_subcommand("exact", "Exact minimal family size");
  exact->add_option("m", cfg.n, "Ground set size")
      ->required()
      ->check(CLI::PositiveNumber);
  exact->add_option("k", cfg.k, "Max member cardinality")
      ->required()
      ->check(CLI::PositiveNumber);
  exact->add_option("mode", cfg.mode_name, "open or closed")->required();
  exact->add_option("--budget", cfg.budget, "Search node budget");
  exact->add_option("--cache", cfg.cache_path, "Exact cell cache JSON");

  CLI::App* gray = app.add_subcommand("gray", "Search a long-run Gray code");
  gray->add_option("n", cfg.n, "Bits")->required()->check(CLI::PositiveNumber);
  gray->add_option("target", cfg.target, "Min run length")
      ->required()
      ->check(CLI::PositiveNumber);
  gray->add_option("--budget", cfg.budget, "Search node budget");

  CLI::App* graytable =
      app.add_subcommand("graytable", "Recompute the Gray code catalog");
  graytable->add_option("--n-max", cfg.max_n, "Largest width")
      ->check(CLI::PositiveNumber);
  graytable->add_option("--budget", cfg.budget, "Search node budget per width");
  graytable->add_option("-o,--output", cfg.out_path, "Catalog JSON output");

  CLI::App* plot = app.add_subcommand("plot", "Render a representation SVG");
  plot->add_option("polygon", cfg.polygon_path, "Polygon JSON file")
      ->required();
  plot->add_option("representation", cfg.rep_path, "Representation JSON file")
      ->required();
  plot->add_option("-o,--output", cfg.out_path, "SVG output file")->required();
  plot->add_option("--window", cfg.window, "x0,y0,x1,y1 view window");
  plot->add_option("--grid", cfg.grid, "Shading cells per axis")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help text
    app.exit(e);
    return kExitInvalid;
  }

  if (represent->parsed()) return cmd_represent(cfg);
  if (verify->parsed()) return cmd_verify(cfg);
  if (bounds->parsed()) return cmd_bounds(cfg);
  if (exact->parsed()) return cmd_exact(cfg);
  if (gray->parsed()) return cmd_gray(cfg);
  if (graytable->parsed()) return cmd_graytable(cfg);
  if (plot->parsed()) return cmd_plot(cfg);
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const PolygonError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalid;
  }
}
