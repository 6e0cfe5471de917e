// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/scenario.hpp"

#include <cmath>
#include <filesystem>

#include "risbound/errors.hpp"

namespace risbound {

std::string to_string(PhaseMode m) {
  switch (m) {
    case PhaseMode::NF: return "nf";
    case PhaseMode::FF: return "ff";
    case PhaseMode::External: return "external";
    case PhaseMode::Matched: return "matched";
  }
  return "?";
}

std::string to_string(Conditioning c) {
  switch (c) {
    case Conditioning::Full: return "full";
    case Conditioning::KnownOrientation: return "known-orientation";
    case Conditioning::KnownPosition: return "known-position";
  }
  return "?";
}

Conditioning conditioning_from_string(const std::string& s) {
  if (s == "full") return Conditioning::Full;
  if (s == "known-orientation" || s == "known_orientation")
    return Conditioning::KnownOrientation;
  if (s == "known-position" || s == "known_position")
    return Conditioning::KnownPosition;
  throw validation_error("unknown conditioning '" + s + "'");
}

void validate_scenario(const Scenario& scenario) {
  validate_signal(scenario.signal);
  validate_lattice(scenario.lattice);
  validate_terminal(scenario.terminal);
  validate_quadrature(scenario.quadrature);
  if (!scenario.pose.position.allFinite())
    throw validation_error("pose.position: must be finite");
  if (!std::isfinite(scenario.pose.orientation.psi_x) ||
      !std::isfinite(scenario.pose.orientation.psi_y) ||
      !std::isfinite(scenario.pose.orientation.psi_z))
    throw validation_error("pose.orientation: must be finite");
  for (const auto& p : scenario.terminal.tx_positions)
    if ((p - scenario.pose.position).norm() == 0.0)
      throw validation_error("pose.position: coincides with a tx antenna");
  for (const auto& p : scenario.terminal.rx_positions)
    if ((p - scenario.pose.position).norm() == 0.0)
      throw validation_error("pose.position: coincides with an rx antenna");
  if (scenario.phase_mode == PhaseMode::External &&
      !std::filesystem::exists(scenario.phase_file))
    throw validation_error("phase_file: '" + scenario.phase_file +
                           "' does not exist");
}

PhaseConfig make_phase_config(const Scenario& scenario, const ModelVariant& variant) {
  PhaseMode mode = scenario.phase_mode;
  if (mode == PhaseMode::Matched)
    mode = variant.wavefront == Wavefront::NearField ? PhaseMode::NF : PhaseMode::FF;
  switch (mode) {
    case PhaseMode::NF:
      return configure_nf(scenario.pose, scenario.lattice, scenario.terminal,
                          scenario.signal.f0);
    case PhaseMode::FF:
      return configure_ff(scenario.pose, scenario.lattice, scenario.terminal,
                          scenario.signal.f0);
    case PhaseMode::External:
      return load_phase_profile(scenario.phase_file, scenario.lattice);
    default:
      throw validation_error("make_phase_config: unresolved phase mode");
  }
}

Eigen::VectorXcd model_vector(double f, const Pose& pose,
                              const Eigen::VectorXd& phases,
                              const Scenario& scenario,
                              const ModelVariant& variant) {
  return model_vector(f, pose, phases, scenario.signal, scenario.terminal,
                      scenario.lattice, variant);
}

double default_element_spacing(double f0) {
  return 0.5 * kSpeedOfLight / f0;
}

double default_gamma_elem(double spacing, double f0) {
  const double lambda0 = kSpeedOfLight / f0;
  const double d2 = spacing * spacing;
  return 4.0 * M_PI * d2 * d2 / (lambda0 * lambda0);
}

int lattice_count_for_side(double side, double spacing) {
  if (!(side >= 2.0 * spacing))
    throw validation_error("lattice side must be at least 2 element spacings");
  return 2 * static_cast<int>(std::floor(side / (2.0 * spacing)));
}

void resize_lattice_for_side(Scenario& scenario, double side) {
  const double d = scenario.lattice.spacing;
  const bool had_default_rcs =
      scenario.lattice.gamma_elem == default_gamma_elem(d, scenario.signal.f0);
  const int count = lattice_count_for_side(side, d);
  scenario.lattice.n_count = count;
  scenario.lattice.m_count = count;
  if (had_default_rcs)
    scenario.lattice.gamma_elem = default_gamma_elem(d, scenario.signal.f0);
}

std::vector<Eigen::Vector3d> make_antenna_grid(int rows, int cols, double spacing,
                                               const Eigen::Vector3d& axis_a,
                                               const Eigen::Vector3d& axis_b,
                                               const Eigen::Vector3d& center) {
  std::vector<Eigen::Vector3d> grid;
  grid.reserve(static_cast<std::size_t>(rows) * cols);
  for (int i = -rows / 2; i < rows - rows / 2; ++i)
    for (int j = -cols / 2; j < cols - cols / 2; ++j)
      grid.push_back(center + spacing * (i * axis_a + j * axis_b));
  return grid;
}

}  // namespace risbound
