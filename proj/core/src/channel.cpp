// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/channel.hpp"

#include <cmath>

#include "risbound/errors.hpp"

namespace risbound {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

SphericalDirection spherical_of(const Eigen::Vector3d& v) {
  const double n = v.norm();
  SphericalDirection dir;
  const double cz = std::clamp(v.z() / n, -1.0, 1.0);
  dir.phi = std::acos(cz);
  dir.theta = (v.x() == 0.0 && v.y() == 0.0) ? 0.0 : std::atan2(v.y(), v.x());
  if (dir.theta == -M_PI) dir.theta = M_PI;
  return dir;
}

std::complex<double> cis(double phase) {
  return {std::cos(phase), std::sin(phase)};
}

}  // namespace

void validate_signal(const SignalSpec& signal) {
  if (!(signal.f0 > 0.0)) throw validation_error("signal.f0: must be > 0");
  if (!(signal.bandwidth > 0.0) || !(signal.bandwidth < 2.0 * signal.f0))
    throw validation_error("signal.bandwidth: must be in (0, 2*f0)");
  if (!(signal.tx_power > 0.0))
    throw validation_error("signal.tx_power: must be > 0");
  if (!(signal.noise_psd > 0.0))
    throw validation_error("signal.noise_psd: must be > 0");
  if (!(signal.integration_time > 0.0))
    throw validation_error("signal.integration_time: must be > 0");
}

std::string to_string(Wavefront w) {
  return w == Wavefront::NearField ? "nearfield" : "farfield";
}

std::string to_string(BandModel b) {
  return b == BandModel::Wideband ? "wideband" : "narrowband";
}

std::string variant_code(const ModelVariant& v) {
  std::string s = v.wavefront == Wavefront::NearField ? "nf-" : "ff-";
  s += v.band == BandModel::Wideband ? "wb" : "nb";
  return s;
}

ModelVariant variant_from_code(const std::string& code) {
  ModelVariant v;
  if (code == "nf-wb") v = {Wavefront::NearField, BandModel::Wideband};
  else if (code == "nf-nb") v = {Wavefront::NearField, BandModel::Narrowband};
  else if (code == "ff-wb") v = {Wavefront::FarField, BandModel::Wideband};
  else if (code == "ff-nb") v = {Wavefront::FarField, BandModel::Narrowband};
  else throw validation_error("unknown variant code '" + code +
                              "' (expected nf-wb, nf-nb, ff-wb or ff-nb)");
  return v;
}

DelaySet exact_delays(const Pose& pose, const RisLattice& lattice,
                      const TerminalGeometry& terminal) {
  const auto elems = element_positions(pose, lattice);
  const int ne = static_cast<int>(elems.size());
  const int nl = terminal.channel_count();

  DelaySet ds;
  ds.tau_in.resize(nl, ne);
  ds.tau_out.resize(nl, ne);
  for (int l = 0; l < nl; ++l) {
    const Eigen::Vector3d& xt = terminal.tx_positions[terminal.channels[l].first];
    const Eigen::Vector3d& xr = terminal.rx_positions[terminal.channels[l].second];
    for (int k = 0; k < ne; ++k) {
      const double din = (elems[k] - xt).norm();
      const double dout = (xr - elems[k]).norm();
      if (din == 0.0 || dout == 0.0)
        throw domain_error("exact_delays: surface element coincides with an antenna");
      ds.tau_in(l, k) = din / kSpeedOfLight;
      ds.tau_out(l, k) = dout / kSpeedOfLight;
    }
  }
  return ds;
}

DelaySet ff_decomposition(const Pose& pose, const RisLattice& lattice,
                          const TerminalGeometry& terminal) {
  const Eigen::Vector3d& x = pose.position;
  const Eigen::Vector3d rt = x - terminal.tx_phase_center;
  const Eigen::Vector3d rr = x - terminal.rx_phase_center;
  const double range_in = rt.norm();
  const double range_out = rr.norm();
  if (range_in == 0.0 || range_out == 0.0)
    throw domain_error("ff_decomposition: pose coincides with a phase center");

  DelaySet ds;
  ds.tau_in_0 = range_in / kSpeedOfLight;
  ds.tau_out_0 = range_out / kSpeedOfLight;

  // Local-frame propagation continuation directions (see DelaySet docs).
  const Eigen::Matrix3d q = rotation_matrix(pose.orientation);
  ds.xi_in = spherical_of(q.transpose() * rt);
  ds.xi_out = spherical_of(q.transpose() * rr);
  // Global directions from the surface towards the phase centers.
  ds.zeta_t = spherical_of(-rt);
  ds.zeta_r = spherical_of(-rr);

  const Eigen::Vector3d u_in = unit_vector(ds.xi_in);
  const Eigen::Vector3d u_out = unit_vector(ds.xi_out);
  const auto offsets = element_offsets(lattice);
  const int ne = static_cast<int>(offsets.size());
  ds.dtau_in_nm.resize(ne);
  ds.dtau_out_nm.resize(ne);
  for (int k = 0; k < ne; ++k) {
    ds.dtau_in_nm[k] = offsets[k].dot(u_in) / kSpeedOfLight;
    ds.dtau_out_nm[k] = offsets[k].dot(u_out) / kSpeedOfLight;
  }

  const Eigen::Vector3d u_zt = unit_vector(ds.zeta_t);
  const Eigen::Vector3d u_zr = unit_vector(ds.zeta_r);
  const int nl = terminal.channel_count();
  ds.dtau_in_l.resize(nl);
  ds.dtau_out_l.resize(nl);
  for (int l = 0; l < nl; ++l) {
    const Eigen::Vector3d et =
        terminal.tx_positions[terminal.channels[l].first] - terminal.tx_phase_center;
    const Eigen::Vector3d er =
        terminal.rx_positions[terminal.channels[l].second] - terminal.rx_phase_center;
    ds.dtau_in_l[l] = et.dot(u_zt) / kSpeedOfLight;
    ds.dtau_out_l[l] = er.dot(u_zr) / kSpeedOfLight;
  }
  return ds;
}

DelaySet make_delay_set(const Pose& pose, const RisLattice& lattice,
                        const TerminalGeometry& terminal) {
  DelaySet ds = ff_decomposition(pose, lattice, terminal);
  DelaySet exact = exact_delays(pose, lattice, terminal);
  ds.tau_in = std::move(exact.tau_in);
  ds.tau_out = std::move(exact.tau_out);
  return ds;
}

Reflectivity path_loss(const Pose& pose, const TerminalGeometry& terminal,
                       const RisLattice& lattice, const SignalSpec& signal,
                       double residual_phase) {
  const double range_in = (pose.position - terminal.tx_phase_center).norm();
  const double range_out = (terminal.rx_phase_center - pose.position).norm();
  if (range_in == 0.0 || range_out == 0.0)
    throw domain_error("path_loss: pose coincides with a phase center");
  const double four_pi = 4.0 * M_PI;
  const double mag = kSpeedOfLight *
                     std::sqrt(lattice.gamma_elem / (four_pi * four_pi * four_pi)) /
                     (signal.f0 * range_in * range_out);
  Reflectivity r;
  r.residual_phase = residual_phase;
  r.rho = mag * cis(residual_phase);
  return r;
}

std::complex<double> spectrum(const SignalSpec& signal, double f) {
  if (std::abs(f) > 0.5 * signal.bandwidth) return {0.0, 0.0};
  return {std::sqrt(signal.energy() / signal.bandwidth), 0.0};
}

std::complex<double> reflection_coefficient(double f0, double f,
                                            const Eigen::VectorXd& phases,
                                            const DelaySet& delays,
                                            const Reflectivity& reflectivity) {
  const int ne = static_cast<int>(delays.dtau_in_nm.size());
  if (phases.size() != ne)
    throw validation_error("reflection_coefficient: phase vector length mismatch");
  std::complex<double> acc{0.0, 0.0};
  const double ftot = f0 + f;
  for (int k = 0; k < ne; ++k)
    acc += cis(phases[k] - kTwoPi * ftot * (delays.dtau_in_nm[k] + delays.dtau_out_nm[k]));
  return reflectivity.rho * acc;
}

Eigen::VectorXcd model_vector(double f, const Pose& pose,
                              const Eigen::VectorXd& phases,
                              const SignalSpec& signal,
                              const TerminalGeometry& terminal,
                              const RisLattice& lattice,
                              const ModelVariant& variant) {
  const int nl = terminal.channel_count();
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(nl);
  const std::complex<double> g = spectrum(signal, f);
  if (g == std::complex<double>{0.0, 0.0}) return a;

  const Reflectivity refl = path_loss(pose, terminal, lattice, signal);
  const double f0 = signal.f0;

  if (variant.wavefront == Wavefront::NearField) {
    const auto elems = element_positions(pose, lattice);
    const int ne = static_cast<int>(elems.size());
    if (phases.size() != ne)
      throw validation_error("model_vector: phase vector length mismatch");

    // Per unique antenna delay tables; channels then index into them.
    const int nt = static_cast<int>(terminal.tx_positions.size());
    const int nr = static_cast<int>(terminal.rx_positions.size());
    Eigen::MatrixXd tin(nt, ne), tout(nr, ne);
    for (int i = 0; i < nt; ++i)
      for (int k = 0; k < ne; ++k) {
        const double d = (elems[k] - terminal.tx_positions[i]).norm();
        if (d == 0.0) throw domain_error("model_vector: element coincides with antenna");
        tin(i, k) = d / kSpeedOfLight;
      }
    for (int i = 0; i < nr; ++i)
      for (int k = 0; k < ne; ++k) {
        const double d = (terminal.rx_positions[i] - elems[k]).norm();
        if (d == 0.0) throw domain_error("model_vector: element coincides with antenna");
        tout(i, k) = d / kSpeedOfLight;
      }

    if (variant.band == BandModel::Wideband) {
      const double ftot = f0 + f;
      for (int l = 0; l < nl; ++l) {
        const auto [ti, ri] = terminal.channels[l];
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < ne; ++k)
          acc += cis(phases[k] - kTwoPi * ftot * (tin(ti, k) + tout(ri, k)));
        a[l] = refl.rho * g * acc;
      }
    } else {
      // Surface response frozen at the carrier; only the macroscopic delay
      // keeps its baseband phase ramp.
      const double t0 = ((pose.position - terminal.tx_phase_center).norm() +
                         (terminal.rx_phase_center - pose.position).norm()) /
                        kSpeedOfLight;
      const std::complex<double> ramp = cis(-kTwoPi * f * t0);
      for (int l = 0; l < nl; ++l) {
        const auto [ti, ri] = terminal.channels[l];
        std::complex<double> acc{0.0, 0.0};
        for (int k = 0; k < ne; ++k)
          acc += cis(phases[k] - kTwoPi * f0 * (tin(ti, k) + tout(ri, k)));
        a[l] = refl.rho * g * ramp * acc;
      }
    }
    return a;
  }

  // Far field: factored plane-wave form.
  const DelaySet ds = ff_decomposition(pose, lattice, terminal);
  const double t0 = ds.tau_in_0 + ds.tau_out_0;
  if (variant.band == BandModel::Wideband) {
    const double ftot = f0 + f;
    const std::complex<double> beta =
        reflection_coefficient(f0, f, phases, ds, refl);
    for (int l = 0; l < nl; ++l)
      a[l] = g * cis(-kTwoPi * ftot * (t0 + ds.dtau_in_l[l] + ds.dtau_out_l[l])) * beta;
  } else {
    const std::complex<double> beta0 =
        reflection_coefficient(f0, 0.0, phases, ds, refl);
    const double ftot = f0 + f;
    for (int l = 0; l < nl; ++l)
      a[l] = g * cis(-kTwoPi * ftot * t0) *
             cis(-kTwoPi * f0 * (ds.dtau_in_l[l] + ds.dtau_out_l[l])) * beta0;
  }
  return a;
}

}  // namespace risbound
