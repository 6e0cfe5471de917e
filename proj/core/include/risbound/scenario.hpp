// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <string>

#include "risbound/channel.hpp"
#include "risbound/geometry.hpp"
#include "risbound/phase_config.hpp"
#include "risbound/quadrature.hpp"

namespace risbound {

/// How the surface phases are chosen when a scenario runs. Matched picks the
/// configuration that corresponds to the evaluated wavefront model (NF model
/// -> focusing profile, FF model -> plane-wave profile).
enum class PhaseMode { NF, FF, External, Matched };

/// Which parameters are treated as known when bounds are extracted.
enum class Conditioning { Full, KnownOrientation, KnownPosition };

std::string to_string(PhaseMode m);
std::string to_string(Conditioning c);
Conditioning conditioning_from_string(const std::string& s);

/// Complete experiment description.
struct Scenario {
  SignalSpec signal;
  TerminalGeometry terminal;
  Pose pose;
  RisLattice lattice;
  ModelVariant variant;
  PhaseMode phase_mode = PhaseMode::Matched;
  std::string phase_file;  // used when phase_mode == External
  QuadratureSpec quadrature;
  Conditioning conditioning = Conditioning::Full;
};

/// Cross-field validation; throws validation_error naming the offending key.
void validate_scenario(const Scenario& scenario);

/// Resolves the scenario's phase mode against the variant actually being
/// evaluated (relevant for Matched) and returns the resulting profile.
PhaseConfig make_phase_config(const Scenario& scenario, const ModelVariant& variant);

/// model_vector evaluated on a scenario's scene at an explicit pose
/// (the pose argument, not scenario.pose, so derivative probes can move it).
Eigen::VectorXcd model_vector(double f, const Pose& pose,
                              const Eigen::VectorXd& phases,
                              const Scenario& scenario,
                              const ModelVariant& variant);

/// Half-wavelength element spacing for a carrier.
double default_element_spacing(double f0);

/// Flat-plate radar cross section of a d x d element at normal incidence:
/// 4 pi d^4 / lambda0^2.
double default_gamma_elem(double spacing, double f0);

/// Side length -> even element count N = M = 2 floor(side / (2 d)).
int lattice_count_for_side(double side, double spacing);

/// Rebuilds the scenario's lattice for a given physical side length, keeping
/// the spacing and refreshing gamma_elem only if it was the default.
void resize_lattice_for_side(Scenario& scenario, double side);

/// Rectangular antenna grid spanning the plane of `axis_a` x `axis_b`
/// (unit vectors), centered on index range -rows/2 .. rows/2-1.
std::vector<Eigen::Vector3d> make_antenna_grid(int rows, int cols, double spacing,
                                               const Eigen::Vector3d& axis_a,
                                               const Eigen::Vector3d& axis_b,
                                               const Eigen::Vector3d& center =
                                                   Eigen::Vector3d::Zero());

}  // namespace risbound
