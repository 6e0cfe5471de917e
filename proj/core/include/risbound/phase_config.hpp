// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <Eigen/Core>
#include <string>

#include "risbound/channel.hpp"
#include "risbound/geometry.hpp"

namespace risbound {

/// Per-element surface phase profile, radians, row-major in (n, m).
/// Phases are stored unwrapped so they remain smooth functions of geometry.
struct PhaseConfig {
  enum class Mode { NF, FF, External };
  Eigen::VectorXd phases;
  Mode mode = Mode::NF;
};

/// Focusing configuration: Phi_nm = 2 pi f0 (|x_nm - x_T| + |x_R - x_nm|)/c.
/// Cancels every exact element phase at the carrier.
PhaseConfig configure_nf(const Pose& pose, const RisLattice& lattice,
                         const TerminalGeometry& terminal, double f0);

/// Plane-wave configuration: Phi_nm = 2 pi f0 (dtau_in_nm + dtau_out_nm).
/// Cancels the linearized excess phases at the carrier, so
/// beta(0 | Phi) = rho N M exactly.
PhaseConfig configure_ff(const Pose& pose, const RisLattice& lattice,
                         const TerminalGeometry& terminal, double f0);

/// Reads an externally supplied profile: one radian value per line,
/// row-major in (n, m). Length must match the lattice.
PhaseConfig load_phase_profile(const std::string& path, const RisLattice& lattice);

}  // namespace risbound
