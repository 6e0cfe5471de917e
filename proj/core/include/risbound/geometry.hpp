// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <Eigen/Core>
#include <array>
#include <utility>
#include <vector>

namespace risbound {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Roll / pitch / yaw, radians. Stored unwrapped: no modular reduction is
/// ever applied behind the caller's back.
struct EulerAngles {
  double psi_x = 0.0;  ///< roll, about x
  double psi_y = 0.0;  ///< pitch, about y
  double psi_z = 0.0;  ///< yaw, about z
};

/// The six estimands: global position plus orientation of the surface.
struct Pose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  EulerAngles orientation;
};

/// Regular N x M element grid in the surface-local xy plane.
///
/// Element indices run n = -N/2 .. N/2-1 and m = -M/2 .. M/2-1, so both
/// counts must be even. gamma_elem is the radar cross section of a single
/// element in m^2.
struct RisLattice {
  int n_count = 0;
  int m_count = 0;
  double spacing = 0.0;     // d, meters
  double gamma_elem = 0.0;  // m^2

  int size() const { return n_count * m_count; }
};

/// Throws validation_error when counts are not positive/even or the physical
/// parameters are out of range.
void validate_lattice(const RisLattice& lattice);

/// Tx/Rx antenna positions plus the channel list (tx index, rx index).
/// Phase centers are the arithmetic means of the respective antenna lists.
struct TerminalGeometry {
  std::vector<Eigen::Vector3d> tx_positions;
  std::vector<Eigen::Vector3d> rx_positions;
  Eigen::Vector3d tx_phase_center = Eigen::Vector3d::Zero();
  Eigen::Vector3d rx_phase_center = Eigen::Vector3d::Zero();
  std::vector<std::pair<int, int>> channels;

  int channel_count() const { return static_cast<int>(channels.size()); }
};

/// Builds a terminal with phase centers computed from the antenna lists.
/// An empty channel list expands to all tx-rx pairs (rx fastest).
TerminalGeometry make_terminal(std::vector<Eigen::Vector3d> tx_positions,
                               std::vector<Eigen::Vector3d> rx_positions,
                               std::vector<std::pair<int, int>> channels = {});

void validate_terminal(const TerminalGeometry& terminal);

/// Direction in spherical form: phi is the polar angle from the local +z
/// axis (broadside) in [0, pi], theta the azimuth from +x in (-pi, pi].
struct SphericalDirection {
  double phi = 0.0;
  double theta = 0.0;
};

/// Q(gamma) = Qz(psi_z) Qy(psi_y) Qx(psi_x), each factor a counterclockwise
/// rotation about its axis. The result is in SO(3).
Eigen::Matrix3d rotation_matrix(const EulerAngles& gamma);

/// Analytic partials dQ/dpsi_x, dQ/dpsi_y, dQ/dpsi_z.
std::array<Eigen::Matrix3d, 3> rotation_jacobian(const EulerAngles& gamma);

/// Local element offsets p_nm = [n d, m d, 0], row-major in (n, m).
std::vector<Eigen::Vector3d> element_offsets(const RisLattice& lattice);

/// Global element positions x_nm = x + Q(gamma) p_nm, row-major in (n, m).
std::vector<Eigen::Vector3d> element_positions(const Pose& pose,
                                               const RisLattice& lattice);

/// Direction from the surface to `point`, expressed in the surface-local
/// frame: v = Q(gamma)^T (point - x). With gamma = 0 the local frame
/// coincides with the global one. theta is pinned to 0 at phi = 0.
/// Throws domain_error when point coincides with the surface position.
SphericalDirection to_local_spherical(const Pose& pose,
                                      const Eigen::Vector3d& point);

/// [sin phi cos theta, sin phi sin theta, cos phi]
Eigen::Vector3d unit_vector(const SphericalDirection& dir);

}  // namespace risbound
