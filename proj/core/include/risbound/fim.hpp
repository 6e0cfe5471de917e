// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <Eigen/Core>
#include <complex>

#include "risbound/channel.hpp"
#include "risbound/quadrature.hpp"
#include "risbound/scenario.hpp"

namespace risbound {

using Matrix6d = Eigen::Matrix<double, 6, 6>;
using Vector6d = Eigen::Matrix<double, 6, 1>;

/// 6x6 Fisher information matrix, parameter ordering (x, y, z, psi_x, psi_y,
/// psi_z). Real symmetric, positive semidefinite.
struct Fim {
  Matrix6d matrix = Matrix6d::Zero();

  Eigen::Block<Matrix6d, 3, 3> xx() { return matrix.block<3, 3>(0, 0); }
  Eigen::Block<Matrix6d, 3, 3> xgamma() { return matrix.block<3, 3>(0, 3); }
  Eigen::Block<Matrix6d, 3, 3> gammax() { return matrix.block<3, 3>(3, 0); }
  Eigen::Block<Matrix6d, 3, 3> gammagamma() { return matrix.block<3, 3>(3, 3); }
  Eigen::Block<const Matrix6d, 3, 3> xx() const { return matrix.block<3, 3>(0, 0); }
  Eigen::Block<const Matrix6d, 3, 3> xgamma() const { return matrix.block<3, 3>(0, 3); }
  Eigen::Block<const Matrix6d, 3, 3> gammax() const { return matrix.block<3, 3>(3, 0); }
  Eigen::Block<const Matrix6d, 3, 3> gammagamma() const { return matrix.block<3, 3>(3, 3); }
};

/// Complex L x 6 gradient of the model vector at one baseband frequency.
/// Columns: d a / d x (3), d a / d gamma (3).
struct ModelJacobian {
  Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 6> d_a_d_theta;
};

/// Per-channel, per-element gradients of the two delay legs. Row index is
/// channel * (N*M) + element, matching the row-major element order.
struct DelayGradients {
  Eigen::Matrix<double, Eigen::Dynamic, 3> dtau_in_dx;
  Eigen::Matrix<double, Eigen::Dynamic, 3> dtau_out_dx;
  Eigen::Matrix<double, Eigen::Dynamic, 3> dtau_in_dgamma;
  Eigen::Matrix<double, Eigen::Dynamic, 3> dtau_out_dgamma;
};

DelayGradients delay_gradients(const Pose& pose, const RisLattice& lattice,
                               const TerminalGeometry& terminal);

enum class JacobianMethod { Analytic, FiniteDifference };

/// Gradient of the model vector w.r.t. the six pose parameters at baseband
/// frequency f. Analytic is available for the near-field wavefront (both
/// band models); far-field variants use Richardson-extrapolated central
/// differences (requesting Analytic for them throws
/// unsupported_method_error).
ModelJacobian model_jacobian(double f, const Pose& pose,
                             const Eigen::VectorXd& phases,
                             const Scenario& scenario,
                             const ModelVariant& variant,
                             JacobianMethod method);

/// Assembles the information matrix by Gauss-Legendre integration over
/// [-B/2, B/2], with node doubling until the relative Frobenius change is
/// below quadrature.refinement (node cap 2^14, then numerical_error carrying
/// the last two iterates). `workers` = 0 uses the hardware thread count.
Fim assemble_fim(const Scenario& scenario, const ModelVariant& variant,
                 const QuadratureSpec& quadrature, int workers = 0);

enum class Axis { X = 0, Y = 1, Z = 2 };

/// Position error bound, meters. known_orientation inverts the position
/// block alone; otherwise the full 6x6 matrix is inverted. Throws
/// numerical_error (with the null-space direction) for singular or
/// condition > 1e14 matrices.
double peb(const Fim& fim, bool known_orientation = false);

/// Orientation error bound for one Euler axis, radians. known_position
/// inverts the orientation block alone.
double oeb(const Fim& fim, Axis axis, bool known_position = false);

/// sqrt(f0^2 + B^2 / 12)
double effective_bandwidth(double f0, double bandwidth);

/// Ratio of largest to smallest absolute eigenvalue (infinite when exactly
/// singular). Never throws.
double condition_number(const Eigen::MatrixXd& symmetric_matrix);

namespace detail {
/// Single fixed-node-count assembly (no doubling); used by assemble_fim,
/// tests and the validation oracle comparisons.
Fim fim_fixed_nodes(const Scenario& scenario, const ModelVariant& variant,
                    const Eigen::VectorXd& phases, int node_count, int workers);
}  // namespace detail

}  // namespace risbound
