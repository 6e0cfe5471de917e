// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <Eigen/Core>
#include <complex>
#include <utility>
#include <vector>

#include "risbound/channel.hpp"
#include "risbound/scenario.hpp"

namespace risbound::detail {

using JacobianStack =
    std::vector<Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 6>>;

/// Immutable per-scenario state for the near-field Jacobian kernel.
/// Element geometry and amplitude terms are precomputed once and shared
/// read-only across frequency nodes and worker threads.
struct NfScene {
  std::vector<Eigen::Vector3d> tx;
  std::vector<Eigen::Vector3d> rx;
  std::vector<std::pair<int, int>> channels;
  std::vector<Eigen::Vector3d> elem;   // global element positions
  std::vector<Eigen::Matrix3d> dqp;    // column c = (dQ/dpsi_c) p_nm
  Eigen::VectorXd phases;
  std::complex<double> rho;
  Eigen::RowVector3d dlogrho_dx;       // d log|rho| / dx
  double f0 = 0.0;
  double g = 0.0;                      // flat in-band spectrum amplitude
  double t0 = 0.0;                     // two-leg phase-center delay
  Eigen::RowVector3d dt0_dx;
};

NfScene make_nf_scene(const Scenario& scenario, const Eigen::VectorXd& phases);

/// Fills rows [l_begin, l_end) of every stack entry: out[k].row(l) is the
/// 1x6 gradient of a_l at baseband node fnodes[k]. Single-threaded and
/// deterministic; the caller partitions channels across workers.
/// The stack must be pre-sized to fnodes.size() matrices of L x 6.
void nf_jacobian_rows(const NfScene& scene, BandModel band,
                      const Eigen::VectorXd& fnodes, int l_begin, int l_end,
                      JacobianStack& out);

}  // namespace risbound::detail
