// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <functional>
#include <string>

#include "risbound/fim.hpp"

namespace risbound {

/// Outcome of an independent brute-force check. `max_relative_error` is the
/// worst column-normalized deviation observed, `location` identifies the
/// worst entry, `converged` reports whether the step sweep reached its
/// target disagreement.
struct OracleReport {
  double max_relative_error = 0.0;
  std::string location;
  bool converged = true;
};

std::string to_string(const OracleReport& report);

/// Central-difference Jacobian of an arbitrary pose-to-observation map.
/// Position steps {1e-4, 1e-5, 1e-6} m and angle steps {1e-5, 1e-6, 1e-7}
/// rad are swept; for each step the half-step Richardson extrapolation is
/// formed and the step with the smallest Richardson disagreement wins.
struct FdJacobianResult {
  ModelJacobian jacobian;
  OracleReport report;
};

FdJacobianResult fd_jacobian_sweep(
    const std::function<Eigen::VectorXcd(const Pose&)>& fn, const Pose& pose);

/// The production wrapper: finite differences on model_vector. Out-of-band
/// frequencies yield a zero Jacobian.
FdJacobianResult fd_model_jacobian(double f, const Pose& pose,
                                   const Eigen::VectorXd& phases,
                                   const Scenario& scenario,
                                   const ModelVariant& variant);

/// Uniform trapezoid-rule information matrix over [-B/2, B/2] built from
/// fd_model_jacobian. Deliberately single-threaded. points >= 16.
Fim trapezoid_fim(const Scenario& scenario, const ModelVariant& variant,
                  int points);

/// Column-normalized worst-entry comparison of two Jacobians.
OracleReport compare_jacobians(const ModelJacobian& test,
                               const ModelJacobian& reference);

/// || a - b ||_F / || b ||_F
double relative_frobenius(const Matrix6d& a, const Matrix6d& b);

}  // namespace risbound
