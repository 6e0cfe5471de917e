// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <string>
#include <vector>

#include "risbound/scenario.hpp"

namespace risbound {

/// Optional sweep grids a scenario file may carry as defaults for the
/// sweep commands.
struct SweepGrids {
  std::vector<double> b_values;
  std::vector<double> sides;
};

struct ScenarioFile {
  Scenario scenario;
  SweepGrids sweep;
};

/// Parses a scenario from a JSON file. `path_or_name` may also be the name
/// of a bundled scenario (paper_fig2a, paper_fig2b, paper_fig3). Throws
/// validation_error with a line/byte-identified message on malformed input
/// and a key-identified message on semantic problems.
Scenario load_scenario(const std::string& path_or_name);

/// Same, but also returns the file's optional sweep grids.
ScenarioFile load_scenario_file(const std::string& path_or_name);

/// Parses scenario JSON from a string (diagnostics name `origin`).
ScenarioFile parse_scenario_text(const std::string& text, const std::string& origin);

std::vector<std::string> bundled_scenario_names();

/// JSON text of a bundled scenario, or nullptr when the name is unknown.
const char* bundled_scenario_text(const std::string& name);

/// Size-reduced copy used by the validation oracle: the surface shrinks to
/// 8 x 8 elements (same spacing and pose) and the Rx list is subsampled to
/// at most 16 antennas, with channels re-expanded to all pairs.
Scenario reduce_scenario(const Scenario& scenario);

}  // namespace risbound
