// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/fim.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <string>

#include "nf_kernel.hpp"
#include "parallel.hpp"
#include "risbound/errors.hpp"

namespace risbound {

namespace {

constexpr double kConditionLimit = 1e14;
constexpr int kNodeCap = 16384;  // 2^14
constexpr double kFdPositionStep = 1e-5;  // meters
constexpr double kFdAngleStep = 1e-6;     // radians
constexpr double kFdConsistencyTol = 1e-5;

using JacobianMatrix = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 6>;

Pose shifted_pose(const Pose& pose, int param, double delta) {
  Pose p = pose;
  switch (param) {
    case 0: p.position.x() += delta; break;
    case 1: p.position.y() += delta; break;
    case 2: p.position.z() += delta; break;
    case 3: p.orientation.psi_x += delta; break;
    case 4: p.orientation.psi_y += delta; break;
    case 5: p.orientation.psi_z += delta; break;
  }
  return p;
}

JacobianMatrix central_difference(double f, const Pose& pose,
                                  const Eigen::VectorXd& phases,
                                  const Scenario& scenario,
                                  const ModelVariant& variant, double hx,
                                  double ha) {
  const int nl = scenario.terminal.channel_count();
  JacobianMatrix d(nl, 6);
  for (int p = 0; p < 6; ++p) {
    const double h = p < 3 ? hx : ha;
    const Eigen::VectorXcd plus =
        model_vector(f, shifted_pose(pose, p, h), phases, scenario, variant);
    const Eigen::VectorXcd minus =
        model_vector(f, shifted_pose(pose, p, -h), phases, scenario, variant);
    d.col(p) = (plus - minus) / (2.0 * h);
  }
  return d;
}

/// Richardson-extrapolated central differences with a half-step consistency
/// check: extrapolations from (h, h/2) and (h/2, h/4) must agree.
JacobianMatrix fd_jacobian(double f, const Pose& pose,
                           const Eigen::VectorXd& phases,
                           const Scenario& scenario,
                           const ModelVariant& variant) {
  const JacobianMatrix d1 =
      central_difference(f, pose, phases, scenario, variant, kFdPositionStep,
                         kFdAngleStep);
  const JacobianMatrix d2 =
      central_difference(f, pose, phases, scenario, variant,
                         kFdPositionStep / 2, kFdAngleStep / 2);
  const JacobianMatrix d4 =
      central_difference(f, pose, phases, scenario, variant,
                         kFdPositionStep / 4, kFdAngleStep / 4);
  const JacobianMatrix coarse = (4.0 * d2 - d1) / 3.0;
  const JacobianMatrix fine = (4.0 * d4 - d2) / 3.0;
  const double scale = fine.norm();
  if (scale > 0.0) {
    const double rel = (coarse - fine).norm() / scale;
    if (rel > kFdConsistencyTol) {
      numerical_error err(
          "finite-difference Jacobian failed its Richardson consistency "
          "check (relative disagreement " +
          std::to_string(rel) + ")");
      throw err;
    }
  }
  return fine;
}

Matrix6d gram_contribution(const JacobianMatrix& d) {
  Matrix6d g;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      const double v = d.col(i).dot(d.col(j)).real();  // conjugating dot
      g(i, j) = v;
      g(j, i) = v;
    }
  return g;
}

struct SymmetricInverse {
  Eigen::MatrixXd inverse;
  double condition;
};

SymmetricInverse invert_symmetric(const Eigen::MatrixXd& m,
                                  const std::string& label) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Eigen::Index imin = 0, imax = 0;
  ev.cwiseAbs().minCoeff(&imin);
  ev.cwiseAbs().maxCoeff(&imax);
  const double amin = std::abs(ev[imin]);
  const double amax = std::abs(ev[imax]);
  const double cond =
      amin == 0.0 ? std::numeric_limits<double>::infinity() : amax / amin;
  if (!(cond <= kConditionLimit)) {
    numerical_error err(label +
                        " is singular or too ill-conditioned to invert "
                        "(condition number " +
                        std::to_string(cond) +
                        "); the reported null-space direction is an "
                        "unidentifiable parameter combination");
    err.condition_number = cond;
    err.null_space = es.eigenvectors().col(imin);
    throw err;
  }
  SymmetricInverse out;
  out.condition = cond;
  out.inverse = es.eigenvectors() *
                ev.cwiseInverse().asDiagonal() *
                es.eigenvectors().transpose();
  return out;
}

}  // namespace

DelayGradients delay_gradients(const Pose& pose, const RisLattice& lattice,
                               const TerminalGeometry& terminal) {
  const auto elems = element_positions(pose, lattice);
  const auto offsets = element_offsets(lattice);
  const auto dq = rotation_jacobian(pose.orientation);
  const int ne = static_cast<int>(elems.size());
  const int nl = terminal.channel_count();
  const double inv_c = 1.0 / kSpeedOfLight;

  DelayGradients g;
  g.dtau_in_dx.resize(nl * ne, 3);
  g.dtau_out_dx.resize(nl * ne, 3);
  g.dtau_in_dgamma.resize(nl * ne, 3);
  g.dtau_out_dgamma.resize(nl * ne, 3);

  for (int l = 0; l < nl; ++l) {
    const Eigen::Vector3d& xt = terminal.tx_positions[terminal.channels[l].first];
    const Eigen::Vector3d& xr = terminal.rx_positions[terminal.channels[l].second];
    for (int k = 0; k < ne; ++k) {
      const Eigen::Vector3d vin = elems[k] - xt;
      const Eigen::Vector3d vout = elems[k] - xr;
      const double nin = vin.norm(), nout = vout.norm();
      if (nin == 0.0 || nout == 0.0)
        throw domain_error("delay_gradients: element coincides with an antenna");
      const Eigen::RowVector3d uin = vin.transpose() / nin;
      const Eigen::RowVector3d uout = vout.transpose() / nout;
      const int row = l * ne + k;
      g.dtau_in_dx.row(row) = uin * inv_c;
      g.dtau_out_dx.row(row) = uout * inv_c;
      Eigen::Matrix3d dqp;
      for (int c = 0; c < 3; ++c) dqp.col(c) = dq[c] * offsets[k];
      g.dtau_in_dgamma.row(row) = uin * dqp * inv_c;
      g.dtau_out_dgamma.row(row) = uout * dqp * inv_c;
    }
  }
  return g;
}

ModelJacobian model_jacobian(double f, const Pose& pose,
                             const Eigen::VectorXd& phases,
                             const Scenario& scenario,
                             const ModelVariant& variant,
                             JacobianMethod method) {
  if (std::abs(f) > 0.5 * scenario.signal.bandwidth) {
    ModelJacobian out;
    out.d_a_d_theta =
        JacobianMatrix::Zero(scenario.terminal.channel_count(), 6);
    return out;
  }
  if (method == JacobianMethod::Analytic) {
    if (variant.wavefront != Wavefront::NearField)
      throw unsupported_method_error(
          "analytic Jacobians are available for the near-field wavefront "
          "only; use FiniteDifference for far-field variants");
    Scenario at_pose = scenario;
    at_pose.pose = pose;
    const detail::NfScene scene = detail::make_nf_scene(at_pose, phases);
    Eigen::VectorXd fnodes(1);
    fnodes[0] = f;
    detail::JacobianStack stack(1);
    stack[0].resize(scenario.terminal.channel_count(), 6);
    detail::nf_jacobian_rows(scene, variant.band, fnodes, 0,
                             scenario.terminal.channel_count(), stack);
    ModelJacobian out;
    out.d_a_d_theta = std::move(stack[0]);
    return out;
  }
  ModelJacobian out;
  out.d_a_d_theta = fd_jacobian(f, pose, phases, scenario, variant);
  return out;
}

namespace detail {

Fim fim_fixed_nodes(const Scenario& scenario, const ModelVariant& variant,
                    const Eigen::VectorXd& phases, int node_count,
                    int workers) {
  const double half_band = 0.5 * scenario.signal.bandwidth;
  const QuadratureRule rule =
      map_to_interval(gauss_legendre(node_count), -half_band, half_band);
  const int nl = scenario.terminal.channel_count();

  JacobianStack stack(static_cast<std::size_t>(node_count));
  for (auto& m : stack) m.resize(nl, 6);

  if (variant.wavefront == Wavefront::NearField) {
    const NfScene scene = make_nf_scene(scenario, phases);
    parallel_blocks(nl, workers, [&](int lo, int hi) {
      nf_jacobian_rows(scene, variant.band, rule.nodes, lo, hi, stack);
    });
  } else {
    parallel_blocks(node_count, workers, [&](int lo, int hi) {
      for (int q = lo; q < hi; ++q)
        stack[static_cast<std::size_t>(q)] = fd_jacobian(
            rule.nodes[q], scenario.pose, phases, scenario, variant);
    });
  }

  Matrix6d f = Matrix6d::Zero();
  for (int q = 0; q < node_count; ++q)
    f += rule.weights[q] * gram_contribution(stack[static_cast<std::size_t>(q)]);
  f *= 2.0 / scenario.signal.noise_psd;

  Fim out;
  out.matrix = 0.5 * (f + f.transpose());
  return out;
}

}  // namespace detail

Fim assemble_fim(const Scenario& scenario, const ModelVariant& variant,
                 const QuadratureSpec& quadrature, int workers) {
  validate_quadrature(quadrature);
  const Eigen::VectorXd phases = make_phase_config(scenario, variant).phases;

  int nodes = quadrature.nodes;
  Fim prev = detail::fim_fixed_nodes(scenario, variant, phases, nodes, workers);
  while (true) {
    const int next_nodes = 2 * nodes - 1;
    if (next_nodes > kNodeCap) {
      numerical_error err(
          "quadrature did not converge to the requested refinement before "
          "the 2^14 node cap (last node count " +
          std::to_string(nodes) + ")");
      err.last_iterate = prev.matrix;
      throw err;
    }
    const Fim next =
        detail::fim_fixed_nodes(scenario, variant, phases, next_nodes, workers);
    const double scale = next.matrix.norm();
    const double change =
        scale == 0.0 ? 0.0 : (next.matrix - prev.matrix).norm() / scale;
    if (change < quadrature.refinement) return next;
    if (2 * next_nodes - 1 > kNodeCap) {
      numerical_error err(
          "quadrature did not converge to the requested refinement before "
          "the 2^14 node cap (last relative change " +
          std::to_string(change) + ")");
      err.last_iterate = next.matrix;
      err.previous_iterate = prev.matrix;
      throw err;
    }
    prev = next;
    nodes = next_nodes;
  }
}

double peb(const Fim& fim, bool known_orientation) {
  if (known_orientation) {
    const Eigen::MatrixXd fxx = fim.xx();
    const SymmetricInverse inv =
        invert_symmetric(fxx, "position information block");
    return std::sqrt(inv.inverse.trace() / 3.0);
  }
  const SymmetricInverse inv =
      invert_symmetric(fim.matrix, "Fisher information matrix");
  return std::sqrt(inv.inverse.topLeftCorner<3, 3>().trace() / 3.0);
}

double oeb(const Fim& fim, Axis axis, bool known_position) {
  const int i = static_cast<int>(axis);
  if (known_position) {
    const Eigen::MatrixXd fgg = fim.gammagamma();
    const SymmetricInverse inv =
        invert_symmetric(fgg, "orientation information block");
    return std::sqrt(inv.inverse(i, i));
  }
  const SymmetricInverse inv =
      invert_symmetric(fim.matrix, "Fisher information matrix");
  return std::sqrt(inv.inverse(3 + i, 3 + i));
}

double effective_bandwidth(double f0, double bandwidth) {
  if (!(f0 > 0.0) || !(bandwidth >= 0.0))
    throw validation_error("effective_bandwidth: f0 must be > 0 and B >= 0");
  return std::sqrt(f0 * f0 + bandwidth * bandwidth / 12.0);
}

double condition_number(const Eigen::MatrixXd& symmetric_matrix) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetric_matrix,
                                                    Eigen::EigenvaluesOnly);
  const Eigen::VectorXd a = es.eigenvalues().cwiseAbs();
  const double amin = a.minCoeff();
  const double amax = a.maxCoeff();
  if (amin == 0.0) return std::numeric_limits<double>::infinity();
  return amax / amin;
}

}  // namespace risbound
