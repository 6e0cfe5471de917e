// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include <doctest.h>

#include <random>

#include "risbound/errors.hpp"
#include "risbound/oracle.hpp"
#include "test_helpers.hpp"

using namespace risbound;
using risbound::testing::make_small_scenario;

namespace {

Eigen::Matrix<double, 6, 1> pose_to_theta(const Pose& p) {
  Eigen::Matrix<double, 6, 1> th;
  th << p.position.x(), p.position.y(), p.position.z(), p.orientation.psi_x,
      p.orientation.psi_y, p.orientation.psi_z;
  return th;
}

}  // namespace

TEST_CASE("fd_jacobian_sweep recovers a linear map exactly") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::Matrix<std::complex<double>, Eigen::Dynamic, 6> m(5, 6);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = {u(rng), u(rng)};

  Pose base;
  base.position = {0.3, -0.7, 1.1};
  base.orientation = {0.2, -0.1, 0.05};
  const FdJacobianResult fd = fd_jacobian_sweep(
      [&](const Pose& p) -> Eigen::VectorXcd { return m * pose_to_theta(p); },
      base);
  CHECK(fd.report.converged);
  CHECK((fd.jacobian.d_a_d_theta - m).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("fd_model_jacobian is zero out of band") {
  Scenario s = make_small_scenario();
  const Eigen::VectorXd phases = make_phase_config(s, s.variant).phases;
  const FdJacobianResult fd = fd_model_jacobian(0.9 * s.signal.bandwidth,
                                                s.pose, phases, s, s.variant);
  CHECK(fd.jacobian.d_a_d_theta.cwiseAbs().maxCoeff() == 0.0);
  CHECK(fd.report.converged);
}

TEST_CASE("trapezoid_fim basics") {
  // The tiniest legal instance keeps the brute-force rule cheap.
  Scenario s = make_small_scenario();
  s.lattice.n_count = s.lattice.m_count = 2;
  s.terminal = make_terminal(
      {Eigen::Vector3d::Zero()},
      make_antenna_grid(2, 2, s.lattice.spacing, Eigen::Vector3d::UnitY(),
                        Eigen::Vector3d::UnitZ()));
  const ModelVariant variant{Wavefront::NearField, BandModel::Wideband};

  SUBCASE("rejects tiny node counts") {
    CHECK_THROWS_AS(trapezoid_fim(s, variant, 8), validation_error);
  }

  SUBCASE("noise scaling is exact") {
    Scenario noisy = s;
    noisy.signal.noise_psd *= 2.0;
    const Fim a = trapezoid_fim(s, variant, 64);
    const Fim b = trapezoid_fim(noisy, variant, 64);
    CHECK((a.matrix - 2.0 * b.matrix).cwiseAbs().maxCoeff() <=
          1e-14 * a.matrix.cwiseAbs().maxCoeff());
  }

  SUBCASE("self convergence at dense grids") {
    const Fim coarse = trapezoid_fim(s, variant, 2048);
    const Fim fine = trapezoid_fim(s, variant, 4096);
    CHECK(relative_frobenius(coarse.matrix, fine.matrix) < 1e-6);
  }

  SUBCASE("agrees with the production assembly") {
    const Fim fast = assemble_fim(s, variant, s.quadrature, 1);
    const Fim slow = trapezoid_fim(s, variant, 512);
    CHECK(relative_frobenius(fast.matrix, slow.matrix) < 1e-4);
  }
}

TEST_CASE("compare_jacobians localizes the worst entry") {
  ModelJacobian a, b;
  a.d_a_d_theta.setZero(3, 6);
  b.d_a_d_theta.setZero(3, 6);
  b.d_a_d_theta(2, 4) = {1.0, 0.0};
  a.d_a_d_theta(2, 4) = {1.0 + 1e-3, 0.0};
  const OracleReport r = compare_jacobians(a, b);
  CHECK(r.max_relative_error == doctest::Approx(1e-3).epsilon(1e-9));
  CHECK(r.location.find("psi_y") != std::string::npos);
  CHECK(r.location.find("channel 2") != std::string::npos);
}

TEST_CASE("oracle report renders as a structured block") {
  OracleReport r;
  r.max_relative_error = 3.2e-8;
  r.location = "d a / d psi_y, channel 7";
  r.converged = true;
  const std::string text = to_string(r);
  CHECK(text.find("oracle-report:") != std::string::npos);
  CHECK(text.find("max_relative_error: 3.2e-08") != std::string::npos);
  CHECK(text.find("converged: true") != std::string::npos);
}
