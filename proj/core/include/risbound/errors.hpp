// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <string>

namespace risbound {

/// Bad configuration or inconsistent inputs (rejected before any numerics run).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Geometrically ill-posed request (coincident points, zero-length direction).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Requested an evaluation method outside its supported variant set.
class unsupported_method_error : public std::logic_error {
 public:
  explicit unsupported_method_error(const std::string& msg) : std::logic_error(msg) {}
};

/// Numerical failure: singular information matrix, quadrature that will not
/// converge, or a finite-difference consistency check that tripped. Carries
/// whatever diagnostics the failing stage could produce.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}

  std::optional<double> condition_number;
  /// Unit direction of the (near-)null space of the matrix that could not be
  /// inverted: the unidentifiable parameter combination.
  std::optional<Eigen::Matrix<double, Eigen::Dynamic, 1>> null_space;
  /// Last two quadrature iterates when node doubling failed to converge.
  std::optional<Eigen::Matrix<double, 6, 6>> last_iterate;
  std::optional<Eigen::Matrix<double, 6, 6>> previous_iterate;
};

}  // namespace risbound
