// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace vortex::census {

namespace {

using kite::KiteClass;

struct PaperRow {
  int collinear, convex, equilateral, concave_interior, concave_exterior;
};

std::optional<PaperRow> paper_row(const Rational& g) {
  const Rational mhalf = rat(-1, 2);
  if (g > 1) return PaperRow{12, 6, 2, 3, 0};
  if (g == 1) return PaperRow{12, 6, 16, 0, 0};
  if (g > 0) return PaperRow{12, 6, 2, 3, 6};
  if (g == 0) return PaperRow{12, 6, 2, 3, 3};
  if (g > mhalf) return PaperRow{12, 6, 2, 0, 0};
  if (g == mhalf) return PaperRow{7, 6, 2, 0, 0};
  if (g > -1) return PaperRow{6, 6, 2, 0, 0};
  if (g == -1) return std::nullopt;  // not covered by the published rows
  return PaperRow{0, 6, 2, 0, 0};
}

// ----- labeling orbit machinery -----

struct Labeled {
  std::array<Vec2, 4> z;
};

bool related_by_similarity(const Labeled& a, const Labeled& b,
                           bool allow_reflection) {
  // Try to map a to b by z -> s R z + t (s > 0).  Centroids are matched
  // first, then the similarity is fixed by one non-central point.
  Vec2 ca{}, cb{};
  for (int i = 0; i < 4; ++i) {
    ca = ca + a.z[i];
    cb = cb + b.z[i];
  }
  ca = ca * 0.25;
  cb = cb * 0.25;
  std::array<Vec2, 4> pa, pb;
  for (int i = 0; i < 4; ++i) {
    pa[i] = a.z[i] - ca;
    pb[i] = b.z[i] - cb;
  }
  int ref = -1;
  for (int i = 0; i < 4; ++i)
    if (pa[i].norm_sq() > 1e-12) ref = i;
  if (ref < 0) return true;
  if (pb[ref].norm_sq() < 1e-12) return false;
  for (int mirror = 0; mirror <= (allow_reflection ? 1 : 0); ++mirror) {
    std::array<Vec2, 4> qa = pa;
    if (mirror)
      for (auto& v : qa) v.y = -v.y;
    // complex ratio w = pb[ref] / qa[ref]
    double den = qa[ref].norm_sq();
    double wr = (pb[ref].x * qa[ref].x + pb[ref].y * qa[ref].y) / den;
    double wi = (pb[ref].y * qa[ref].x - pb[ref].x * qa[ref].y) / den;
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      Vec2 mapped{wr * qa[i].x - wi * qa[i].y, wi * qa[i].x + wr * qa[i].y};
      if ((mapped - pb[i]).norm_sq() > 1e-14) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

OrbitCheck orbit_check(const std::string& name, const std::array<Vec2, 4>& pts,
                       const std::array<double, 4>& gammas, int table_value) {
  // All strength-preserving assignments of labels to points.
  std::array<int, 4> perm = {0, 1, 2, 3};
  std::vector<Labeled> labelings;
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (int i = 0; i < 4; ++i)
      if (gammas[perm[i]] != gammas[i]) ok = false;
    if (!ok) continue;
    Labeled lab;
    for (int i = 0; i < 4; ++i) lab.z[i] = pts[perm[i]];
    labelings.push_back(lab);
  } while (std::next_permutation(perm.begin(), perm.end()));

  auto orbits = [&](bool refl) {
    std::vector<int> owner(labelings.size(), -1);
    int count = 0;
    for (size_t i = 0; i < labelings.size(); ++i) {
      if (owner[i] >= 0) continue;
      owner[i] = count;
      for (size_t j = i + 1; j < labelings.size(); ++j)
        if (owner[j] < 0 &&
            related_by_similarity(labelings[i], labelings[j], refl))
          owner[j] = count;
      ++count;
    }
    return count;
  };

  OrbitCheck chk;
  chk.cls = name;
  chk.table_value = table_value;
  chk.rotation_only = orbits(false);
  chk.with_reflections = orbits(true);
  if (table_value == chk.rotation_only)
    chk.convention = "rotation-only";
  else if (table_value == chk.with_reflections)
    chk.convention = "with-reflections";
  chk.table_consistent = !chk.convention.empty();
  return chk;
}

int solved_class_count(const std::vector<kite::KiteSolution>& sols,
                       KiteClass cls) {
  int n = 0;
  for (const auto& s : sols)
    if (s.cls == cls && s.certificate.pass) ++n;
  return n;
}

}  // namespace

int count_labelings(KiteClass cls, double gamma4) {
  switch (cls) {
    case KiteClass::Square:
      return 6;
    case KiteClass::Convex:
      return 6;
    case KiteClass::EquilateralInterior:
      return std::fabs(gamma4 - 1.0) < 1e-12 ? 8 : 2;
    case KiteClass::EquilateralExterior:
      return 8;  // exists only when all strengths are equal
    case KiteClass::ConcaveInterior:
      return 3;
    case KiteClass::ConcaveExterior:
      return 3;
  }
  throw std::domain_error("count_labelings: unknown class");
}

std::vector<OrbitCheck> validate_labelings() {
  std::vector<OrbitCheck> out;
  const double s3 = std::sqrt(3.0);
  // square, all strengths equal
  out.push_back(orbit_check("square", {Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, -1}, Vec2{0, 1}},
                            {1, 1, 1, 1}, count_labelings(KiteClass::Square, 1)));
  // equilateral with a vortex at the barycenter, all equal
  std::array<Vec2, 4> eq = {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, s3}, Vec2{0, s3 / 3}};
  out.push_back(orbit_check("equilateral-interior@1", eq, {1, 1, 1, 1},
                            count_labelings(KiteClass::EquilateralInterior, 1)));
  out.push_back(orbit_check("equilateral-exterior@1", eq, {1, 1, 1, 1},
                            count_labelings(KiteClass::EquilateralExterior, 1)));
  // barycenter family with a distinct strength inside
  out.push_back(orbit_check("equilateral-interior", {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, s3}, Vec2{0, s3 / 3}},
                            {1, 1, 1, 2}, count_labelings(KiteClass::EquilateralInterior, 2)));
  // generic convex kite
  out.push_back(orbit_check("convex", {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -0.8}, Vec2{0, 1.3}},
                            {1, 1, 1, 2}, count_labelings(KiteClass::Convex, 2)));
  // isosceles triangle with the distinct strength inside
  out.push_back(orbit_check("concave-interior", {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, -2.2}, Vec2{0, -0.15}},
                            {1, 1, 1, 2}, count_labelings(KiteClass::ConcaveInterior, 2)));
  // distinct strength outside the unit triangle
  out.push_back(orbit_check("concave-exterior", {Vec2{-1, 0}, Vec2{1, 0}, Vec2{0, 0.9}, Vec2{0, 2.4}},
                            {1, 1, 1, 2}, count_labelings(KiteClass::ConcaveExterior, 2)));
  return out;
}

std::optional<int> paper_row_total(const Rational& g) {
  auto row = paper_row(g);
  if (!row) return std::nullopt;
  return row->collinear + row->convex + row->equilateral +
         row->concave_interior + row->concave_exterior;
}

CensusRow census_at(const Rational& gamma4) {
  CensusRow row;
  row.gamma4 = gamma4;
  const double g4 = gamma4.get_d();

  // Collinear: exact Sturm census of the eliminant.
  auto col = collinear::census(gamma4);
  row.collinear = col.root_count;
  if (col.symmetric_count > 0 && !col.symmetric_contained) {
    row.collinear += col.symmetric_count;
    row.discrepancies.push_back(
        "collinear: symmetric family not contained in the eliminant roots");
  }

  // Kite families (the strength-zero case uses the dedicated solver).
  auto sols = kite::solve_kite(g4, 1e-12);
  for (const auto& s : sols)
    if (!s.resolved) row.incomplete = true;

  int n_square = solved_class_count(sols, KiteClass::Square);
  int n_convex = solved_class_count(sols, KiteClass::Convex);
  int n_ci = solved_class_count(sols, KiteClass::ConcaveInterior);
  int n_ce = solved_class_count(sols, KiteClass::ConcaveExterior);
  int n_eqi = solved_class_count(sols, KiteClass::EquilateralInterior);
  int n_eqe = solved_class_count(sols, KiteClass::EquilateralExterior);

  row.convex = 6 * (n_square + n_convex);
  row.concave_interior = 3 * n_ci;
  row.concave_exterior = 3 * n_ce;
  row.equilateral = n_eqi * count_labelings(KiteClass::EquilateralInterior, g4) +
                    n_eqe * count_labelings(KiteClass::EquilateralExterior, g4);

  // Rhombi beyond the square: counted only when certified.
  for (const auto& fam : rhombus::enumerate_families(g4)) {
    if (!fam.certificate.pass) continue;
    if (std::fabs(fam.x_squared - 1.0) < 1e-9) continue;  // the square again
    row.rhombus_extra += 6;
    row.discrepancies.push_back("rhombus: unexpected certified non-square rhombus");
  }

  row.total = row.collinear + row.convex + row.concave_interior +
              row.concave_exterior + row.equilateral + row.rhombus_extra;
  row.paper_total = paper_row_total(gamma4);
  row.match = row.paper_total && *row.paper_total == row.total;

  if (auto pr = paper_row(gamma4); pr && !row.match) {
    auto note = [&](const char* fam, int got, int want) {
      if (got != want)
        row.discrepancies.push_back(std::string(fam) + ": computed " +
                                    std::to_string(got) + ", published " +
                                    std::to_string(want));
    };
    note("collinear", row.collinear, pr->collinear);
    note("convex", row.convex, pr->convex);
    note("equilateral", row.equilateral, pr->equilateral);
    note("concave-interior", row.concave_interior, pr->concave_interior);
    note("concave-exterior", row.concave_exterior, pr->concave_exterior);
  }
  return row;
}

SweepResult sweep(const Rational& lo, const Rational& hi, int samples,
                  int workers) {
  if (samples < 2) throw std::domain_error("sweep: samples must be >= 2");
  SweepResult result;
  std::vector<Rational> xs;
  for (int i = 0; i < samples; ++i)
    xs.push_back(lo + (hi - lo) * rat(i, samples - 1));

  result.rows.resize(xs.size());
  workers = std::max(1, workers);
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= xs.size()) break;
      result.rows[i] = census_at(xs[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  result.collinear_bifurcations =
      collinear::bifurcation_values(lo, hi, std::max(8, samples * 4));
  for (const Rational& b : {rat(-1, 2), rat(0), rat(1)})
    if (lo < b && b < hi) result.known_bifurcations.push_back(b);
  return result;
}

}  // namespace vortex::census
