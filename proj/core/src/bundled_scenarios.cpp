// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers
//
// Built-in scenarios for the monostatic 78.5 GHz rooftop-surface experiments.
// The Rx element spacing is not part of the published setup; half a
// wavelength is used, which shifts absolute bound levels slightly but none
// of the trends.

#include "risbound/scenario_io.hpp"

namespace risbound {

namespace {

constexpr const char* kFig2a = R"json({
  "signal": {
    "f0": 78.5e9,
    "bandwidth": 1e9,
    "tx_power": 23.0,
    "noise_psd": -173.0,
    "integration_time": 1e-3
  },
  "terminal": {
    "tx_positions": [[0.0, 0.0, 0.0]],
    "rx_grid": {"rows": 20, "cols": 20, "axes": ["y", "z"]},
    "channels": "all_pairs"
  },
  "pose": {
    "position": [5.0, 0.0, -5.5],
    "orientation": [0.0, 0.0, 0.0]
  },
  "lattice": {"side": 0.10},
  "variant": {"wavefront": "nearfield", "band": "wideband"},
  "phase_mode": "matched",
  "quadrature": {"nodes": 129, "refinement": 1e-8},
  "conditioning": "full",
  "sweep": {
    "b_values": [1e9, 2e9, 3e9, 4e9, 5e9, 6e9, 7e9, 8e9, 9e9, 10e9]
  }
})json";

constexpr const char* kFig2b = R"json({
  "signal": {
    "f0": 78.5e9,
    "bandwidth": 1e9,
    "tx_power": 23.0,
    "noise_psd": -173.0,
    "integration_time": 1e-3
  },
  "terminal": {
    "tx_positions": [[0.0, 0.0, 0.0]],
    "rx_grid": {"rows": 20, "cols": 20, "axes": ["y", "z"]},
    "channels": "all_pairs"
  },
  "pose": {
    "position": [5.0, 0.0, -5.5],
    "orientation": [0.0, 0.0, 0.0]
  },
  "lattice": {"side": 0.20},
  "variant": {"wavefront": "nearfield", "band": "wideband"},
  "phase_mode": "matched",
  "quadrature": {"nodes": 129, "refinement": 1e-8},
  "conditioning": "full",
  "sweep": {
    "b_values": [1e9, 2e9, 3e9, 4e9, 5e9, 6e9, 7e9, 8e9, 9e9, 10e9]
  }
})json";

constexpr const char* kFig3 = R"json({
  "signal": {
    "f0": 78.5e9,
    "bandwidth": 1e9,
    "tx_power": 23.0,
    "noise_psd": -173.0,
    "integration_time": 1e-3
  },
  "terminal": {
    "tx_positions": [[0.0, 0.0, 0.0]],
    "rx_grid": {"rows": 20, "cols": 20, "axes": ["y", "z"]},
    "channels": "all_pairs"
  },
  "pose": {
    "position": [5.0, 0.0, -5.5],
    "orientation": [0.0, 0.0, 0.0]
  },
  "lattice": {"side": 0.10},
  "variant": {"wavefront": "nearfield", "band": "wideband"},
  "phase_mode": "matched",
  "quadrature": {"nodes": 129, "refinement": 1e-8},
  "conditioning": "known-position",
  "sweep": {
    "b_values": [1e9, 4e9, 8e9],
    "sides": [0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35]
  }
})json";

}  // namespace

std::vector<std::string> bundled_scenario_names() {
  return {"paper_fig2a", "paper_fig2b", "paper_fig3"};
}

const char* bundled_scenario_text(const std::string& name) {
  if (name == "paper_fig2a") return kFig2a;
  if (name == "paper_fig2b") return kFig2b;
  if (name == "paper_fig3") return kFig3;
  return nullptr;
}

}  // namespace risbound
