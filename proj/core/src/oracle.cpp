// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/oracle.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "risbound/errors.hpp"

namespace risbound {

namespace {

constexpr std::array<double, 3> kPositionSteps = {1e-4, 1e-5, 1e-6};
constexpr std::array<double, 3> kAngleSteps = {1e-5, 1e-6, 1e-7};
constexpr double kSweepTarget = 1e-6;

const char* param_name(int p) {
  static const char* names[6] = {"x", "y", "z", "psi_x", "psi_y", "psi_z"};
  return names[p];
}

Pose shifted(const Pose& pose, int param, double delta) {
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

Eigen::VectorXcd central_column(
    const std::function<Eigen::VectorXcd(const Pose&)>& fn, const Pose& pose,
    int param, double h) {
  return (fn(shifted(pose, param, h)) - fn(shifted(pose, param, -h))) /
         (2.0 * h);
}

}  // namespace

std::string to_string(const OracleReport& report) {
  std::ostringstream os;
  os << "oracle-report:\n"
     << "  max_relative_error: " << report.max_relative_error << "\n"
     << "  location: " << (report.location.empty() ? "-" : report.location)
     << "\n"
     << "  converged: " << (report.converged ? "true" : "false");
  return os.str();
}

FdJacobianResult fd_jacobian_sweep(
    const std::function<Eigen::VectorXcd(const Pose&)>& fn, const Pose& pose) {
  const Eigen::VectorXcd probe = fn(pose);
  const int nl = static_cast<int>(probe.size());

  FdJacobianResult result;
  result.jacobian.d_a_d_theta.resize(nl, 6);
  result.report.max_relative_error = 0.0;
  result.report.converged = true;

  for (int p = 0; p < 6; ++p) {
    const auto& steps = p < 3 ? kPositionSteps : kAngleSteps;
    double best_disagreement = std::numeric_limits<double>::infinity();
    Eigen::VectorXcd best_column;
    double best_step = steps[0];
    int best_row = 0;
    for (const double h : steps) {
      const Eigen::VectorXcd full = central_column(fn, pose, p, h);
      const Eigen::VectorXcd half = central_column(fn, pose, p, h / 2);
      const Eigen::VectorXcd richardson = (4.0 * half - full) / 3.0;
      const double scale = richardson.cwiseAbs().maxCoeff();
      Eigen::Index worst = 0;
      const double diff = (half - full).cwiseAbs().maxCoeff(&worst);
      const double disagreement = scale == 0.0 ? 0.0 : diff / scale;
      if (disagreement < best_disagreement) {
        best_disagreement = disagreement;
        best_column = richardson;
        best_step = h;
        best_row = static_cast<int>(worst);
      }
    }
    result.jacobian.d_a_d_theta.col(p) = best_column;
    if (best_disagreement > result.report.max_relative_error) {
      result.report.max_relative_error = best_disagreement;
      std::ostringstream os;
      os << "d a / d " << param_name(p) << ", channel " << best_row
         << ", step " << best_step;
      result.report.location = os.str();
    }
    if (!(best_disagreement < kSweepTarget)) result.report.converged = false;
  }
  return result;
}

FdJacobianResult fd_model_jacobian(double f, const Pose& pose,
                                   const Eigen::VectorXd& phases,
                                   const Scenario& scenario,
                                   const ModelVariant& variant) {
  if (std::abs(f) > 0.5 * scenario.signal.bandwidth) {
    FdJacobianResult result;
    result.jacobian.d_a_d_theta = Eigen::Matrix<std::complex<double>,
                                                Eigen::Dynamic, 6>::Zero(
        scenario.terminal.channel_count(), 6);
    result.report.converged = true;
    result.report.location = "out of band";
    return result;
  }
  return fd_jacobian_sweep(
      [&](const Pose& p) {
        return model_vector(f, p, phases, scenario, variant);
      },
      pose);
}

Fim trapezoid_fim(const Scenario& scenario, const ModelVariant& variant,
                  int points) {
  if (points < 16)
    throw validation_error("trapezoid_fim: points must be >= 16");
  const Eigen::VectorXd phases = make_phase_config(scenario, variant).phases;
  const double half_band = 0.5 * scenario.signal.bandwidth;
  const double step = scenario.signal.bandwidth / (points - 1);

  Matrix6d acc = Matrix6d::Zero();
  for (int i = 0; i < points; ++i) {
    const double f = -half_band + i * step;
    const FdJacobianResult fd =
        fd_model_jacobian(f, scenario.pose, phases, scenario, variant);
    const auto& d = fd.jacobian.d_a_d_theta;
    const double w = (i == 0 || i == points - 1) ? 0.5 * step : step;
    for (int a = 0; a < 6; ++a)
      for (int b = a; b < 6; ++b) {
        const double v = w * d.col(a).dot(d.col(b)).real();
        acc(a, b) += v;
        if (b != a) acc(b, a) += v;
      }
  }
  acc *= 2.0 / scenario.signal.noise_psd;

  Fim out;
  out.matrix = 0.5 * (acc + acc.transpose());
  return out;
}

OracleReport compare_jacobians(const ModelJacobian& test,
                               const ModelJacobian& reference) {
  OracleReport report;
  report.max_relative_error = 0.0;
  for (int p = 0; p < 6; ++p) {
    const double scale =
        reference.d_a_d_theta.col(p).cwiseAbs().maxCoeff();
    if (scale == 0.0) continue;
    Eigen::Index worst = 0;
    const double diff = (test.d_a_d_theta.col(p) - reference.d_a_d_theta.col(p))
                            .cwiseAbs()
                            .maxCoeff(&worst);
    const double rel = diff / scale;
    if (rel > report.max_relative_error) {
      report.max_relative_error = rel;
      std::ostringstream os;
      os << "d a / d " << param_name(p) << ", channel " << worst;
      report.location = os.str();
    }
  }
  return report;
}

double relative_frobenius(const Matrix6d& a, const Matrix6d& b) {
  const double scale = b.norm();
  if (scale == 0.0) return a.norm() == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return (a - b).norm() / scale;
}

}  // namespace risbound
