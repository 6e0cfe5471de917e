// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/geometry.hpp"

#include <cmath>
#include <string>

#include "risbound/errors.hpp"

namespace risbound {

namespace {

Eigen::Matrix3d rot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d q;
  q << 1, 0, 0,
       0, c, -s,
       0, s, c;
  return q;
}

Eigen::Matrix3d rot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d q;
  q << c, 0, s,
       0, 1, 0,
       -s, 0, c;
  return q;
}

Eigen::Matrix3d rot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d q;
  q << c, -s, 0,
       s, c, 0,
       0, 0, 1;
  return q;
}

Eigen::Matrix3d drot_x(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d q;
  q << 0, 0, 0,
       0, -s, -c,
       0, c, -s;
  return q;
}

Eigen::Matrix3d drot_y(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d q;
  q << -s, 0, c,
       0, 0, 0,
       -c, 0, -s;
  return q;
}

Eigen::Matrix3d drot_z(double a) {
  const double c = std::cos(a), s = std::sin(a);
  Eigen::Matrix3d q;
  q << -s, -c, 0,
       c, -s, 0,
       0, 0, 0;
  return q;
}

}  // namespace

void validate_lattice(const RisLattice& lattice) {
  if (lattice.n_count < 1 || lattice.m_count < 1)
    throw validation_error("lattice: n_count and m_count must be >= 1");
  if (lattice.n_count % 2 != 0)
    throw validation_error("lattice.n_count: must be even (got " +
                           std::to_string(lattice.n_count) + ")");
  if (lattice.m_count % 2 != 0)
    throw validation_error("lattice.m_count: must be even (got " +
                           std::to_string(lattice.m_count) + ")");
  if (!(lattice.spacing > 0.0))
    throw validation_error("lattice.spacing: must be > 0");
  if (!(lattice.gamma_elem > 0.0))
    throw validation_error("lattice.gamma_elem: must be > 0");
}

TerminalGeometry make_terminal(std::vector<Eigen::Vector3d> tx_positions,
                               std::vector<Eigen::Vector3d> rx_positions,
                               std::vector<std::pair<int, int>> channels) {
  TerminalGeometry t;
  t.tx_positions = std::move(tx_positions);
  t.rx_positions = std::move(rx_positions);
  if (channels.empty()) {
    channels.reserve(t.tx_positions.size() * t.rx_positions.size());
    for (std::size_t i = 0; i < t.tx_positions.size(); ++i)
      for (std::size_t j = 0; j < t.rx_positions.size(); ++j)
        channels.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  t.channels = std::move(channels);
  Eigen::Vector3d tc = Eigen::Vector3d::Zero(), rc = Eigen::Vector3d::Zero();
  for (const auto& p : t.tx_positions) tc += p;
  for (const auto& p : t.rx_positions) rc += p;
  if (!t.tx_positions.empty()) tc /= static_cast<double>(t.tx_positions.size());
  if (!t.rx_positions.empty()) rc /= static_cast<double>(t.rx_positions.size());
  t.tx_phase_center = tc;
  t.rx_phase_center = rc;
  return t;
}

void validate_terminal(const TerminalGeometry& terminal) {
  if (terminal.tx_positions.empty())
    throw validation_error("terminal.tx_positions: must not be empty");
  if (terminal.rx_positions.empty())
    throw validation_error("terminal.rx_positions: must not be empty");
  if (terminal.channels.empty())
    throw validation_error("terminal.channels: must not be empty");
  for (const auto& [ti, ri] : terminal.channels) {
    if (ti < 0 || ti >= static_cast<int>(terminal.tx_positions.size()))
      throw validation_error("terminal.channels: tx index " +
                             std::to_string(ti) + " out of range");
    if (ri < 0 || ri >= static_cast<int>(terminal.rx_positions.size()))
      throw validation_error("terminal.channels: rx index " +
                             std::to_string(ri) + " out of range");
  }
  Eigen::Vector3d tc = Eigen::Vector3d::Zero(), rc = Eigen::Vector3d::Zero();
  for (const auto& p : terminal.tx_positions) tc += p;
  for (const auto& p : terminal.rx_positions) rc += p;
  tc /= static_cast<double>(terminal.tx_positions.size());
  rc /= static_cast<double>(terminal.rx_positions.size());
  if ((tc - terminal.tx_phase_center).norm() > 1e-12 ||
      (rc - terminal.rx_phase_center).norm() > 1e-12)
    throw validation_error(
        "terminal: phase centers must equal the antenna list means "
        "(build terminals with make_terminal)");
}

Eigen::Matrix3d rotation_matrix(const EulerAngles& gamma) {
  return rot_z(gamma.psi_z) * rot_y(gamma.psi_y) * rot_x(gamma.psi_x);
}

std::array<Eigen::Matrix3d, 3> rotation_jacobian(const EulerAngles& gamma) {
  const Eigen::Matrix3d qx = rot_x(gamma.psi_x);
  const Eigen::Matrix3d qy = rot_y(gamma.psi_y);
  const Eigen::Matrix3d qz = rot_z(gamma.psi_z);
  return {qz * qy * drot_x(gamma.psi_x),
          qz * drot_y(gamma.psi_y) * qx,
          drot_z(gamma.psi_z) * qy * qx};
}

std::vector<Eigen::Vector3d> element_offsets(const RisLattice& lattice) {
  validate_lattice(lattice);
  std::vector<Eigen::Vector3d> offsets;
  offsets.reserve(static_cast<std::size_t>(lattice.size()));
  const double d = lattice.spacing;
  for (int n = -lattice.n_count / 2; n < lattice.n_count / 2; ++n)
    for (int m = -lattice.m_count / 2; m < lattice.m_count / 2; ++m)
      offsets.emplace_back(n * d, m * d, 0.0);
  return offsets;
}

std::vector<Eigen::Vector3d> element_positions(const Pose& pose,
                                               const RisLattice& lattice) {
  const Eigen::Matrix3d q = rotation_matrix(pose.orientation);
  std::vector<Eigen::Vector3d> positions = element_offsets(lattice);
  for (auto& p : positions) p = pose.position + q * p;
  return positions;
}

SphericalDirection to_local_spherical(const Pose& pose,
                                      const Eigen::Vector3d& point) {
  const Eigen::Matrix3d q = rotation_matrix(pose.orientation);
  const Eigen::Vector3d v = q.transpose() * (point - pose.position);
  const double n = v.norm();
  if (n == 0.0)
    throw domain_error("to_local_spherical: point coincides with the pose position");
  SphericalDirection dir;
  const double cz = std::clamp(v.z() / n, -1.0, 1.0);
  dir.phi = std::acos(cz);
  dir.theta = (v.x() == 0.0 && v.y() == 0.0) ? 0.0 : std::atan2(v.y(), v.x());
  if (dir.theta == -M_PI) dir.theta = M_PI;
  return dir;
}

Eigen::Vector3d unit_vector(const SphericalDirection& dir) {
  const double sp = std::sin(dir.phi);
  return {sp * std::cos(dir.theta), sp * std::sin(dir.theta), std::cos(dir.phi)};
}

}  // namespace risbound
