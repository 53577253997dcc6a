// Copyright (c) 2026 the vortex-atlas authors
// SPDX-License-Identifier: Apache-2.0

#ifndef VORTEXATLAS_IO_HPP
#define VORTEXATLAS_IO_HPP

#include <json.hpp>
#include <string>

#include "vortexatlas/census.hpp"
#include "vortexatlas/collinear.hpp"
#include "vortexatlas/kite.hpp"
#include "vortexatlas/rhombus.hpp"
#include "vortexatlas/vortexcore.hpp"

namespace vortex::io {

using nlohmann::json;

json config_to_json(const Config& cfg);
Config config_from_json(const json& j);

json certificate_to_json(const Certificate& cert);
json collinear_solution_to_json(const collinear::Solution& s);
json kite_solution_to_json(const kite::KiteSolution& s);
json census_row_to_json(const census::CensusRow& row);

std::string census_rows_to_csv(const std::vector<census::CensusRow>& rows);
std::string rhombus_sweep_to_csv(const std::vector<rhombus::Family>& families);

// Writes through a temporary file and renames into place.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace vortex::io

#endif
