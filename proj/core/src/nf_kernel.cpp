// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers
//
// Built with -ffast-math so the per-node sin/cos batches vectorize through
// libmvec. Keep anything that must honour strict IEEE semantics out of this
// translation unit.

#include "nf_kernel.hpp"

#include <cmath>

#include "risbound/errors.hpp"

namespace risbound::detail {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

NfScene make_nf_scene(const Scenario& scenario, const Eigen::VectorXd& phases) {
  const Pose& pose = scenario.pose;
  NfScene s;
  s.tx = scenario.terminal.tx_positions;
  s.rx = scenario.terminal.rx_positions;
  s.channels = scenario.terminal.channels;
  s.elem = element_positions(pose, scenario.lattice);
  if (phases.size() != static_cast<Eigen::Index>(s.elem.size()))
    throw validation_error("nf kernel: phase vector length mismatch");
  s.phases = phases;

  const auto offsets = element_offsets(scenario.lattice);
  const auto dq = rotation_jacobian(pose.orientation);
  s.dqp.resize(offsets.size());
  for (std::size_t i = 0; i < offsets.size(); ++i)
    for (int c = 0; c < 3; ++c) s.dqp[i].col(c) = dq[c] * offsets[i];

  const Reflectivity refl =
      path_loss(pose, scenario.terminal, scenario.lattice, scenario.signal);
  s.rho = refl.rho;
  const Eigen::Vector3d rt = pose.position - scenario.terminal.tx_phase_center;
  const Eigen::Vector3d rr = pose.position - scenario.terminal.rx_phase_center;
  const double range_in = rt.norm(), range_out = rr.norm();
  s.dlogrho_dx = (-rt / (range_in * range_in) - rr / (range_out * range_out)).transpose();
  s.f0 = scenario.signal.f0;
  s.g = std::sqrt(scenario.signal.energy() / scenario.signal.bandwidth);
  s.t0 = (range_in + range_out) / kSpeedOfLight;
  s.dt0_dx = ((rt / range_in + rr / range_out) / kSpeedOfLight).transpose();
  return s;
}

void nf_jacobian_rows(const NfScene& scene, BandModel band,
                      const Eigen::VectorXd& fnodes, int l_begin, int l_end,
                      JacobianStack& out) {
  const int nk = static_cast<int>(fnodes.size());
  const int ne = static_cast<int>(scene.elem.size());
  const double inv_c = 1.0 / kSpeedOfLight;

  if (band == BandModel::Narrowband) {
    // The element sums are frequency independent; accumulate them once per
    // channel and expand over nodes afterwards.
    for (int l = l_begin; l < l_end; ++l) {
      const Eigen::Vector3d& xt = scene.tx[scene.channels[l].first];
      const Eigen::Vector3d& xr = scene.rx[scene.channels[l].second];
      std::complex<double> a0{0, 0};
      std::complex<double> bx[3] = {}, bg[3] = {};
      for (int k = 0; k < ne; ++k) {
        const Eigen::Vector3d vin = scene.elem[k] - xt;
        const Eigen::Vector3d vout = scene.elem[k] - xr;
        const double nin = vin.norm(), nout = vout.norm();
        const Eigen::Vector3d usum = vin / nin + vout / nout;
        const double tau = (nin + nout) * inv_c;
        const double theta = scene.phases[k] - kTwoPi * scene.f0 * tau;
        const std::complex<double> w{std::cos(theta), std::sin(theta)};
        a0 += w;
        for (int c = 0; c < 3; ++c) {
          bx[c] += (usum[c] * inv_c) * w;
          bg[c] += (usum.dot(scene.dqp[k].col(c)) * inv_c) * w;
        }
      }
      const std::complex<double> rg = scene.rho * scene.g;
      for (int q = 0; q < nk; ++q) {
        const double f = fnodes[q];
        const std::complex<double> pre{std::cos(-kTwoPi * f * scene.t0),
                                       std::sin(-kTwoPi * f * scene.t0)};
        const std::complex<double> jwf{0.0, -kTwoPi * f};
        const std::complex<double> jw0{0.0, -kTwoPi * scene.f0};
        auto& row = out[q];
        for (int c = 0; c < 3; ++c)
          row(l, c) = rg * pre *
                      (jwf * scene.dt0_dx[c] * a0 + jw0 * bx[c] +
                       scene.dlogrho_dx[c] * a0);
        for (int c = 0; c < 3; ++c) row(l, 3 + c) = rg * pre * jw0 * bg[c];
      }
    }
    return;
  }

  // Wideband: every node needs its own element sum. Phases are linear in
  // the node frequency, so one fused pass per element fills all nodes.
  std::vector<double> theta(nk), cs(nk), sn(nk);
  std::vector<double> acc(static_cast<std::size_t>(14) * nk);

  for (int l = l_begin; l < l_end; ++l) {
    const Eigen::Vector3d& xt = scene.tx[scene.channels[l].first];
    const Eigen::Vector3d& xr = scene.rx[scene.channels[l].second];
    std::fill(acc.begin(), acc.end(), 0.0);
    double* a_re = acc.data();
    double* a_im = a_re + nk;
    // six gradient sums, re/im interleaved by block
    double* s_re[6];
    double* s_im[6];
    for (int c = 0; c < 6; ++c) {
      s_re[c] = acc.data() + (2 + 2 * c) * nk;
      s_im[c] = acc.data() + (3 + 2 * c) * nk;
    }

    for (int k = 0; k < ne; ++k) {
      const Eigen::Vector3d vin = scene.elem[k] - xt;
      const Eigen::Vector3d vout = scene.elem[k] - xr;
      const double nin = vin.norm(), nout = vout.norm();
      const Eigen::Vector3d usum = vin / nin + vout / nout;
      const double tau = (nin + nout) * inv_c;
      double w[6];
      for (int c = 0; c < 3; ++c) w[c] = usum[c] * inv_c;
      for (int c = 0; c < 3; ++c) w[3 + c] = usum.dot(scene.dqp[k].col(c)) * inv_c;

      const double base = scene.phases[k] - kTwoPi * scene.f0 * tau;
      const double slope = -kTwoPi * tau;
      for (int q = 0; q < nk; ++q) theta[q] = base + slope * fnodes[q];
      for (int q = 0; q < nk; ++q) sn[q] = std::sin(theta[q]);
      for (int q = 0; q < nk; ++q) cs[q] = std::cos(theta[q]);

      for (int q = 0; q < nk; ++q) {
        const double cr = cs[q], ci = sn[q];
        a_re[q] += cr;
        a_im[q] += ci;
        s_re[0][q] += w[0] * cr; s_im[0][q] += w[0] * ci;
        s_re[1][q] += w[1] * cr; s_im[1][q] += w[1] * ci;
        s_re[2][q] += w[2] * cr; s_im[2][q] += w[2] * ci;
        s_re[3][q] += w[3] * cr; s_im[3][q] += w[3] * ci;
        s_re[4][q] += w[4] * cr; s_im[4][q] += w[4] * ci;
        s_re[5][q] += w[5] * cr; s_im[5][q] += w[5] * ci;
      }
    }

    const std::complex<double> rg = scene.rho * scene.g;
    for (int q = 0; q < nk; ++q) {
      const double omega = kTwoPi * (scene.f0 + fnodes[q]);
      const std::complex<double> val{a_re[q], a_im[q]};
      auto& row = out[q];
      for (int c = 0; c < 3; ++c) {
        // (-j omega) * S + dlogrho * V, all times rho g
        const std::complex<double> s{s_re[c][q], s_im[c][q]};
        row(l, c) = rg * (std::complex<double>{omega * s.imag(), -omega * s.real()} +
                          scene.dlogrho_dx[c] * val);
      }
      for (int c = 0; c < 3; ++c) {
        const std::complex<double> s{s_re[3 + c][q], s_im[3 + c][q]};
        row(l, 3 + c) =
            rg * std::complex<double>{omega * s.imag(), -omega * s.real()};
      }
    }
  }
}

}  // namespace risbound::detail
