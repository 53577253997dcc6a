// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: per-strength solution atlases, censuses and
// sweeps over the free-strength line, certification of user-supplied
// configurations, and plot-ready curve data.
//
// Exit codes: 0 success, 2 usage error, 3 mathematical failure
// (certification failure, transcription mismatch, or an unresolved
// solver candidate).

#include <CLI11.hpp>
#include <cstdlib>
#include <sstream>
#include <fstream>
#include <iostream>

#include "vortexatlas/io.hpp"
#include "vortexatlas/special.hpp"

namespace {

using namespace vortex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMath = 3;

struct Options {
  std::string gamma4 = "1";
  std::string range;
  int samples = 9;
  std::string eps = "1/1000000000000";
  std::string format = "json";
  std::string out;
  int workers = 0;
  std::string family = "all";
  std::string config_path;
  std::string plot = "f-zero";
  std::string bounds = "-3:3";
  bool extended = false;
};

Rational parse_rational_or_die(const std::string& text, const char* what) {
  auto v = parse_rational(text);
  if (!v) {
    std::cerr << "invalid " << what << ": " << text << "\n";
    std::exit(kExitUsage);
  }
  return *v;
}

std::pair<Rational, Rational> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    std::cerr << "range must be lo:hi\n";
    std::exit(kExitUsage);
  }
  Rational lo = parse_rational_or_die(text.substr(0, colon), "range lo");
  Rational hi = parse_rational_or_die(text.substr(colon + 1), "range hi");
  if (!(lo < hi)) {
    std::cerr << "range must have lo < hi\n";
    std::exit(kExitUsage);
  }
  return {lo, hi};
}

void emit(const Options& opt, const std::string& content) {
  if (opt.out.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
  } else {
    io::atomic_write(opt.out, content);
  }
}

int cmd_solve(const Options& opt) {
  Rational g4 = parse_rational_or_die(opt.gamma4, "gamma4");
  Rational eps = parse_rational_or_die(opt.eps, "eps");
  json solutions = json::array();
  bool failure = false;

  if (opt.family == "collinear" || opt.family == "all") {
    for (const auto& s : collinear::solve(g4, eps)) {
      solutions.push_back(io::collinear_solution_to_json(s));
      if (!s.certificate.pass) failure = true;
    }
    if (g4 == Rational(1)) {
      auto c = collinear::census(g4);
      if (!c.symmetric_contained)
        for (const auto& s : collinear::symmetric_solutions(g4))
          solutions.push_back(io::collinear_solution_to_json(s));
    }
  }
  if (opt.family == "kite" || opt.family == "all") {
    for (const auto& s : kite::solve_kite(g4.get_d(), eps.get_d(), opt.extended)) {
      solutions.push_back(io::kite_solution_to_json(s));
      if (!s.certificate.pass || !s.resolved) failure = true;
    }
  }
  if (opt.family == "rhombus" || opt.family == "all") {
    for (const auto& f : rhombus::enumerate_families(g4.get_d())) {
      json j{{"gamma4", f.gamma4},
             {"x_squared", f.x_squared},
             {"side_ratio_sq", f.side_ratio_sq},
             {"lambda_scaled", f.lambda_scaled},
             {"family", f.branch == rhombus::FamilyBranch::A ? "A" : "B"},
             {"certificate", io::certificate_to_json(f.certificate)}};
      solutions.push_back(j);
      // a non-certified rhombus shape is expected away from the square;
      // it is not a mathematical failure of the run
    }
  }

  json doc{{"schema", 1},
           {"gamma4", to_string(g4)},
           {"family", opt.family},
           {"solutions", solutions}};
  emit(opt, doc.dump(2));
  return failure ? kExitMath : kExitOk;
}

int cmd_census(const Options& opt) {
  Rational g4 = parse_rational_or_die(opt.gamma4, "gamma4");
  if (opt.family == "collinear" && opt.format == "csv") {
    auto c = collinear::census(g4);
    std::ostringstream out;
    out << "gamma4,root_count,symmetric_count\n"
        << to_string(c.gamma4) << ',' << c.root_count << ','
        << c.symmetric_count << '\n';
    emit(opt, out.str());
    return kExitOk;
  }
  auto row = census::census_at(g4);
  if (opt.format == "csv") {
    emit(opt, io::census_rows_to_csv({row}));
  } else {
    json kite_records = json::array();
    for (const auto& s : kite::solve_kite(g4.get_d(), 1e-12))
      kite_records.push_back(io::kite_solution_to_json(s));
    json doc{{"schema", 1},
             {"row", io::census_row_to_json(row)},
             {"kite_solutions", kite_records}};
    emit(opt, doc.dump(2));
  }
  return row.incomplete ? kExitMath : kExitOk;
}

int cmd_sweep(const Options& opt) {
  auto [lo, hi] = parse_range(opt.range.empty() ? "-1:2" : opt.range);
  int workers = opt.workers;
  if (workers <= 0) {
    if (const char* env = std::getenv("VORTEX_ATLAS_WORKERS"))
      workers = std::atoi(env);
    if (workers <= 0) workers = 1;
  }
  auto result = census::sweep(lo, hi, opt.samples, workers);
  bool incomplete = false;
  for (const auto& r : result.rows) incomplete |= r.incomplete;

  if (opt.format == "csv") {
    emit(opt, io::census_rows_to_csv(result.rows));
  } else {
    json rows = json::array();
    for (const auto& r : result.rows) rows.push_back(io::census_row_to_json(r));
    json brackets = json::array();
    for (const auto& b : result.collinear_bifurcations)
      brackets.push_back(json{{"lo", to_string(b.lo)},
                              {"hi", to_string(b.hi)},
                              {"count_lo", b.count_lo},
                              {"count_hi", b.count_hi},
                              {"certified", b.certified}});
    json doc{{"schema", 1},
             {"rows", rows},
             {"collinear_bifurcations", brackets},
             {"kite_critical_gamma4", 1.0}};
    emit(opt, doc.dump(2));
  }
  return incomplete ? kExitMath : kExitOk;
}

int cmd_certify(const Options& opt) {
  if (opt.config_path.empty()) {
    std::cerr << "certify needs --config <file.json>\n";
    return kExitUsage;
  }
  std::ifstream in(opt.config_path);
  if (!in) {
    std::cerr << "cannot open " << opt.config_path << "\n";
    return kExitUsage;
  }
  json j;
  in >> j;
  Config cfg = io::config_from_json(j);
  Rational eps = parse_rational_or_die(opt.eps, "eps");
  Certificate cert = certify(cfg, std::max(eps.get_d(), 1e-15));
  json doc{{"schema", 1},
           {"configuration", io::config_to_json(cfg)},
           {"certificate", io::certificate_to_json(cert)}};
  emit(opt, doc.dump(2));
  return cert.pass ? kExitOk : kExitMath;
}

int cmd_curves(const Options& opt) {
  auto [lo, hi] = parse_range(opt.bounds);
  double klo = lo.get_d(), khi = hi.get_d();
  std::ostringstream out;
  out << "curve,k,l\n";
  out.precision(12);
  if (opt.plot == "f-zero" || opt.plot == "all") {
    // both branches of the solution curve via continuation; the square
    // sits on the upper branch and the barycenter point on the lower one
    const double s3 = std::sqrt(3.0);
    for (auto seed : {kite::KitePoint{1.0, 1.0}, kite::KitePoint{s3, -1 / s3}}) {
      auto arc = kite::trace_curve(seed, 1e-2, klo, khi, klo, khi);
      for (const auto& p : arc.samples)
        out << "f-zero," << p.k << ',' << p.l << '\n';
    }
  }
  if (opt.plot == "pole" || opt.plot == "all") {
    for (double k = 0.02; k <= khi; k += 0.01)
      out << "pole," << k << ',' << (1 - k * k) / (2 * k) << '\n';
  }
  emit(opt, out.str());
  return kExitOk;
}

int cmd_rhombus(const Options& opt) {
  auto [lo, hi] = parse_range(opt.range.empty() ? "-5:3" : opt.range);
  std::vector<rhombus::Family> families;
  int n = std::max(2, opt.samples);
  for (int i = 0; i < n; ++i) {
    double g = lo.get_d() + (hi.get_d() - lo.get_d()) * i / (n - 1);
    if (std::fabs(3 * g + 1) < 1e-12) continue;
    for (auto& f : rhombus::enumerate_families(g)) families.push_back(f);
  }
  emit(opt, io::rhombus_sweep_to_csv(families));
  return kExitOk;
}

// flat key=value configuration file; command-line flags take precedence
void apply_config_file(const std::string& path, Options& opt,
                       const CLI::App& app) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open config file " << path << "\n";
    std::exit(kExitUsage);
  }
  auto is_set = [&](const char* flag) {
    auto* o = app.get_option_no_throw(flag);
    return o && o->count() > 0;
  };
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    std::string key = line.substr(0, eq), value = line.substr(eq + 1);
    if (key == "gamma4" && !is_set("--gamma4")) opt.gamma4 = value;
    else if (key == "range" && !is_set("--range")) opt.range = value;
    else if (key == "samples" && !is_set("--samples")) opt.samples = std::stoi(value);
    else if (key == "eps" && !is_set("--eps")) opt.eps = value;
    else if (key == "format" && !is_set("--format")) opt.format = value;
    else if (key == "out" && !is_set("--out")) opt.out = value;
    else if (key == "workers" && !is_set("--workers")) opt.workers = std::stoi(value);
    else if (key == "family" && !is_set("--family")) opt.family = value;
    else if (key == "config" && !is_set("--config")) opt.config_path = value;
    else if (key == "plot" && !is_set("--plot")) opt.plot = value;
    else if (key == "bounds" && !is_set("--bounds")) opt.bounds = value;
    else if (key == "extended" && !is_set("--extended")) opt.extended = value == "true";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"four-vortex relative equilibria atlas"};
  app.require_subcommand(1);

  Options opt;
  std::string config_file;
  app.add_option("--config-file", config_file, "flat key=value defaults file");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--gamma4", opt.gamma4, "free vortex strength (exact, e.g. 1/2)");
    sub->add_option("--range", opt.range, "strength interval lo:hi");
    sub->add_option("--samples", opt.samples, "sample count for sweeps");
    sub->add_option("--eps", opt.eps, "refinement width (exact rational)");
    sub->add_option("--format", opt.format, "json or csv");
    sub->add_option("--out", opt.out, "output path (atomic write)");
    sub->add_option("--workers", opt.workers,
                    "worker threads (default: VORTEX_ATLAS_WORKERS or 1)");
    sub->add_option("--family", opt.family,
                    "collinear, kite, rhombus, or all");
    sub->add_option("--config", opt.config_path, "configuration JSON to certify");
    sub->add_option("--plot", opt.plot, "curve id for curves: f-zero, pole, all");
    sub->add_option("--bounds", opt.bounds, "plot window lo:hi");
    sub->add_flag("--extended", opt.extended,
                  "also scan the branch tails beyond the named arcs");
  };

  auto* solve = app.add_subcommand("solve", "solutions at one strength");
  auto* censusc = app.add_subcommand("census", "labeled-class counts at one strength");
  auto* sweepc = app.add_subcommand("sweep", "censuses over a strength interval");
  auto* certifyc = app.add_subcommand("certify", "certify a configuration file");
  auto* curvesc = app.add_subcommand("curves", "plot data for the kite curve");
  auto* rhombusc = app.add_subcommand("rhombus", "rhombus family sweep");
  for (auto* sub : {solve, censusc, sweepc, certifyc, curvesc, rhombusc})
    add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (!config_file.empty()) {
    const CLI::App* active = app.get_subcommands().front();
    apply_config_file(config_file, opt, *active);
  }

  try {
    if (solve->parsed()) return cmd_solve(opt);
    if (censusc->parsed()) return cmd_census(opt);
    if (sweepc->parsed()) return cmd_sweep(opt);
    if (certifyc->parsed()) return cmd_certify(opt);
    if (curvesc->parsed()) return cmd_curves(opt);
    if (rhombusc->parsed()) return cmd_rhombus(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitUsage;
}
