// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "risbound/errors.hpp"
#include "risbound/fim.hpp"
#include "risbound/oracle.hpp"
#include "test_helpers.hpp"

using namespace risbound;
using risbound::testing::make_paper_scenario;
using risbound::testing::make_small_scenario;

TEST_CASE("delay_gradients geometry") {
  Scenario s = make_small_scenario();
  const DelayGradients g = delay_gradients(s.pose, s.lattice, s.terminal);
  const int ne = s.lattice.size();
  const int k00 = (0 + 4) * 8 + (0 + 4);

  SUBCASE("lattice origin is insensitive to rotation") {
    for (int l = 0; l < s.terminal.channel_count(); ++l) {
      CHECK(g.dtau_in_dgamma.row(l * ne + k00).norm() == 0.0);
      CHECK(g.dtau_out_dgamma.row(l * ne + k00).norm() == 0.0);
    }
  }

  SUBCASE("position gradients are unit vectors over c") {
    for (int row = 0; row < g.dtau_in_dx.rows(); row += 37) {
      CHECK(g.dtau_in_dx.row(row).norm() * kSpeedOfLight ==
            doctest::Approx(1.0).epsilon(1e-13));
      CHECK(g.dtau_out_dx.row(row).norm() * kSpeedOfLight ==
            doctest::Approx(1.0).epsilon(1e-13));
    }
  }

  SUBCASE("matches central differences of exact_delays") {
    std::mt19937 rng(31);
    const Pose pose = risbound::testing::perturbed_pose(s.pose, rng, 0.4, 0.4);
    const DelayGradients gr = delay_gradients(pose, s.lattice, s.terminal);
    const double hx = 1e-6, ha = 1e-7;
    auto tau_at = [&](const Pose& p) {
      return exact_delays(p, s.lattice, s.terminal);
    };
    for (int param = 0; param < 6; ++param) {
      Pose plus = pose, minus = pose;
      const double h = param < 3 ? hx : ha;
      auto bump = [&](Pose& q, double delta) {
        switch (param) {
          case 0: q.position.x() += delta; break;
          case 1: q.position.y() += delta; break;
          case 2: q.position.z() += delta; break;
          case 3: q.orientation.psi_x += delta; break;
          case 4: q.orientation.psi_y += delta; break;
          case 5: q.orientation.psi_z += delta; break;
        }
      };
      bump(plus, h);
      bump(minus, -h);
      const DelaySet dp = tau_at(plus), dm = tau_at(minus);
      double worst = 0, scale = 0;
      for (int l = 0; l < s.terminal.channel_count(); ++l)
        for (int k = 0; k < ne; ++k) {
          const double fd = (dp.tau_in(l, k) - dm.tau_in(l, k)) / (2 * h);
          const double an = param < 3 ? gr.dtau_in_dx(l * ne + k, param)
                                      : gr.dtau_in_dgamma(l * ne + k, param - 3);
          worst = std::max(worst, std::abs(fd - an));
          scale = std::max(scale, std::abs(an));
        }
      CHECK(worst < 1e-9 * std::max(scale, 1e-12));
    }
  }
}

TEST_CASE("model_jacobian methods agree and respect variant support") {
  Scenario s = make_small_scenario();
  const ModelVariant nf_wb{Wavefront::NearField, BandModel::Wideband};
  const Eigen::VectorXd phases = make_phase_config(s, nf_wb).phases;
  const double f = 0.25 * s.signal.bandwidth;

  SUBCASE("analytic vs finite differences, both band models") {
    for (const BandModel band : {BandModel::Wideband, BandModel::Narrowband}) {
      const ModelVariant v{Wavefront::NearField, band};
      const ModelJacobian a =
          model_jacobian(f, s.pose, phases, s, v, JacobianMethod::Analytic);
      const ModelJacobian d = model_jacobian(f, s.pose, phases, s, v,
                                             JacobianMethod::FiniteDifference);
      const OracleReport cmp = compare_jacobians(a, d);
      CHECK(cmp.max_relative_error < 1e-6);
    }
  }

  SUBCASE("analytic far field is refused") {
    CHECK_THROWS_AS(
        model_jacobian(f, s.pose, phases, s,
                       {Wavefront::FarField, BandModel::Wideband},
                       JacobianMethod::Analytic),
        unsupported_method_error);
  }

  SUBCASE("quadrupled power doubles every entry") {
    Scenario loud = s;
    loud.signal.tx_power *= 4.0;
    const ModelJacobian base =
        model_jacobian(f, s.pose, phases, s, nf_wb, JacobianMethod::Analytic);
    const ModelJacobian l =
        model_jacobian(f, s.pose, phases, loud, nf_wb, JacobianMethod::Analytic);
    CHECK((l.d_a_d_theta - 2.0 * base.d_a_d_theta).cwiseAbs().maxCoeff() <
          1e-13 * base.d_a_d_theta.cwiseAbs().maxCoeff());
  }

  SUBCASE("yaw column vanishes for a boresight scene") {
    // Surface straight below a monostatic single antenna: in-plane (yaw)
    // rotation moves every element perpendicular to the line of sight.
    Scenario b = make_small_scenario();
    b.lattice.n_count = b.lattice.m_count = 2;
    b.pose.position = {0, 0, -7.0};
    b.terminal = make_terminal({{0, 0, 0}}, {{0, 0, 0}});
    const Eigen::VectorXd ph = make_phase_config(b, nf_wb).phases;
    const ModelJacobian j =
        model_jacobian(f, b.pose, ph, b, nf_wb, JacobianMethod::Analytic);
    const double yaw = j.d_a_d_theta.col(5).cwiseAbs().maxCoeff();
    const double tilt = j.d_a_d_theta.col(3).cwiseAbs().maxCoeff();
    CHECK(yaw < 1e-9 * tilt);
  }

  SUBCASE("out-of-band jacobian is zero") {
    const ModelJacobian j =
        model_jacobian(0.51 * s.signal.bandwidth, s.pose, phases, s, nf_wb,
                       JacobianMethod::Analytic);
    CHECK(j.d_a_d_theta.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("assemble_fim scalings, structure and convergence") {
  Scenario s = make_small_scenario();
  const ModelVariant nf_wb{Wavefront::NearField, BandModel::Wideband};

  SUBCASE("exact 1/N0 scaling") {
    Scenario noisy = s;
    noisy.signal.noise_psd *= 2.0;
    const Fim a = assemble_fim(s, nf_wb, s.quadrature, 1);
    const Fim b = assemble_fim(noisy, nf_wb, noisy.quadrature, 1);
    CHECK((a.matrix - 2.0 * b.matrix).cwiseAbs().maxCoeff() <=
          1e-14 * a.matrix.cwiseAbs().maxCoeff());
  }

  SUBCASE("narrowband integrand needs no refinement") {
    const ModelVariant nf_nb{Wavefront::NearField, BandModel::Narrowband};
    const Eigen::VectorXd phases = make_phase_config(s, nf_nb).phases;
    const Fim k129 = detail::fim_fixed_nodes(s, nf_nb, phases, 129, 1);
    const Fim k257 = detail::fim_fixed_nodes(s, nf_nb, phases, 257, 1);
    CHECK(relative_frobenius(k129.matrix, k257.matrix) < 1e-10);
  }

  SUBCASE("paper-scale position block is invertible and PSD") {
    Scenario p = make_paper_scenario(0.10, 20);
    const Fim f = assemble_fim(p, nf_wb, p.quadrature, 0);
    Eigen::SelfAdjointEigenSolver<Matrix6d> es(f.matrix);
    CHECK(es.eigenvalues().minCoeff() >=
          -1e-10 * es.eigenvalues().cwiseAbs().maxCoeff());
    CHECK(condition_number(f.xx()) < 1e14);

    // Frozen against an independent implementation of the whole pipeline.
    CHECK(peb(f) == doctest::Approx(5.511733723658649e-6).epsilon(1e-8));
    CHECK(peb(f, true) == doctest::Approx(3.937948699152755e-6).epsilon(1e-8));
    CHECK(oeb(f, Axis::Y) == doctest::Approx(1.316384660647407e-6).epsilon(1e-8));
    CHECK(oeb(f, Axis::Y, true) ==
          doctest::Approx(7.792495398181051e-7).epsilon(1e-8));
  }

  SUBCASE("symmetry and positive semidefiniteness over random scenes") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> ub(0.3e9, 3e9);
    for (int trial = 0; trial < 5; ++trial) {
      Scenario g = make_small_scenario(ub(rng));
      g.pose = risbound::testing::perturbed_pose(g.pose, rng, 0.5, 0.4);
      const Fim f = assemble_fim(g, nf_wb, g.quadrature, 1);
      CHECK((f.matrix - f.matrix.transpose()).norm() <= 1e-10 * f.matrix.norm());
      Eigen::SelfAdjointEigenSolver<Matrix6d> es(f.matrix);
      CHECK(es.eigenvalues().minCoeff() >=
            -1e-10 * es.eigenvalues().cwiseAbs().maxCoeff());
    }
  }
}

TEST_CASE("peb and oeb extraction") {
  SUBCASE("isotropic information inverts in closed form") {
    Fim f;
    f.matrix = 4.0 * Matrix6d::Identity();
    CHECK(peb(f) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(peb(f, true) == doctest::Approx(0.5).epsilon(1e-15));
    for (const Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      CHECK(oeb(f, axis) == doctest::Approx(0.5).epsilon(1e-15));
      CHECK(oeb(f, axis, true) == doctest::Approx(0.5).epsilon(1e-15));
    }
  }

  SUBCASE("conditioning can only help") {
    Scenario s = make_small_scenario();
    const Fim f = assemble_fim(s, s.variant, s.quadrature, 1);
    CHECK(peb(f, true) <= peb(f, false));
    for (const Axis axis : {Axis::X, Axis::Y, Axis::Z})
      CHECK(oeb(f, axis, true) <= oeb(f, axis, false));
  }

  SUBCASE("singular information identifies its null space") {
    Fim f;
    f.matrix = Matrix6d::Identity();
    f.matrix(5, 5) = 0.0;
    try {
      peb(f);
      FAIL("expected numerical_error");
    } catch (const numerical_error& e) {
      REQUIRE(e.null_space.has_value());
      CHECK(std::abs((*e.null_space)(5)) == doctest::Approx(1.0).epsilon(1e-12));
      REQUIRE(e.condition_number.has_value());
      CHECK(*e.condition_number > 1e14);
    }
  }
}

TEST_CASE("effective_bandwidth") {
  CHECK(effective_bandwidth(78.5e9, 0.0) == doctest::Approx(78.5e9));
  CHECK(effective_bandwidth(78.5e9, 10e9) ==
        doctest::Approx(78553060623.58954).epsilon(1e-12));
  const double ratio = (78.5e9 * 78.5e9) / (10e9 * 10e9 / 12.0);
  CHECK(ratio == doctest::Approx(739.47).epsilon(1e-4));
  CHECK_THROWS_AS(effective_bandwidth(-1.0, 1.0), validation_error);
}
