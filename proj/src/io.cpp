// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#include "vortexatlas/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vortex::io {

json config_to_json(const Config& cfg) {
  json positions = json::array();
  for (const auto& z : cfg.z) positions.push_back({z.x, z.y});
  json gamma = json::array();
  for (double g : cfg.gamma) gamma.push_back(g);
  return json{{"positions", positions}, {"gamma", gamma}};
}

Config config_from_json(const json& j) {
  Config cfg;
  const auto& pos = j.at("positions");
  const auto& gam = j.at("gamma");
  if (pos.size() != 4 || gam.size() != 4)
    throw std::runtime_error("configuration must have four vortices");
  for (int i = 0; i < 4; ++i) {
    cfg.z[i] = Vec2{pos[i].at(0).get<double>(), pos[i].at(1).get<double>()};
    cfg.gamma[i] = gam[i].get<double>();
  }
  return cfg;
}

namespace {

const char* kind_name(MotionKind k) {
  switch (k) {
    case MotionKind::AbsoluteEquilibrium: return "absolute-equilibrium";
    case MotionKind::RigidTranslation: return "rigid-translation";
    case MotionKind::RelativeEquilibrium: return "relative-equilibrium";
    case MotionKind::None: return "none";
  }
  return "?";
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
  return json{{"kind", kind_name(cert.kind)},
              {"pass", cert.pass},
              {"tolerance", cert.tolerance},
              {"lambda", cert.lambda},
              {"omega", cert.omega},
              {"center", {cert.center.x, cert.center.y}},
              {"residual_motion", cert.residual_motion},
              {"residual_dziobek", cert.residual_dziobek},
              {"residual_condition10", cert.residual_condition10},
              {"collinear", cert.collinear}};
}

json collinear_solution_to_json(const collinear::Solution& s) {
  json j{{"x1", s.x1},
         {"x2", s.x2},
         {"lambda", s.lambda},
         {"c", s.c},
         {"symmetric", s.symmetric},
         {"gamma4", s.gamma4},
         {"certificate", certificate_to_json(s.certificate)}};
  if (s.has_interval) {
    j["x2_interval"] = {to_string(s.x2_lo), to_string(s.x2_hi)};
  }
  return j;
}

json kite_solution_to_json(const kite::KiteSolution& s) {
  return json{{"k", s.point.k},
              {"l", s.point.l},
              {"class", kite::to_string(s.cls)},
              {"gamma4", s.gamma4},
              {"arc", s.arc},
              {"resolved", s.resolved},
              {"certificate", certificate_to_json(s.certificate)}};
}

json census_row_to_json(const census::CensusRow& row) {
  json j{{"gamma4", to_string(row.gamma4)},
         {"collinear", row.collinear},
         {"convex", row.convex},
         {"concave_interior", row.concave_interior},
         {"concave_exterior", row.concave_exterior},
         {"equilateral", row.equilateral},
         {"rhombus_extra", row.rhombus_extra},
         {"total", row.total},
         {"match", row.match},
         {"incomplete", row.incomplete},
         {"discrepancies", row.discrepancies}};
  if (row.paper_total) j["paper_total"] = *row.paper_total;
  return j;
}

std::string census_rows_to_csv(const std::vector<census::CensusRow>& rows) {
  std::ostringstream out;
  out << "gamma4,collinear,convex,concave_interior,concave_exterior,"
         "equilateral,rhombus_extra,total,paper_total,match\n";
  for (const auto& r : rows) {
    out << to_string(r.gamma4) << ',' << r.collinear << ',' << r.convex << ','
        << r.concave_interior << ',' << r.concave_exterior << ','
        << r.equilateral << ',' << r.rhombus_extra << ',' << r.total << ',';
    if (r.paper_total)
      out << *r.paper_total;
    else
      out << "NA";
    out << ',' << (r.match ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string rhombus_sweep_to_csv(const std::vector<rhombus::Family>& families) {
  std::ostringstream out;
  out << "gamma4,x_squared,side_ratio_sq,lambda_scaled,family,admissible,"
         "certified\n";
  for (const auto& f : families) {
    out << f.gamma4 << ',' << f.x_squared << ',' << f.side_ratio_sq << ','
        << f.lambda_scaled << ','
        << (f.branch == rhombus::FamilyBranch::A ? "A" : "B") << ','
        << (f.admissible ? "yes" : "no") << ','
        << (f.certificate.pass ? "yes" : "no") << '\n';
  }
  return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

}  // namespace vortex::io
