// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <Eigen/Core>
#include <complex>
#include <string>

#include "risbound/geometry.hpp"

namespace risbound {

/// Transmit signal description. tx_power and noise_psd are stored in linear
/// units (watts, watts/Hz); the config layer converts from dBm / dBm-per-Hz.
struct SignalSpec {
  double f0 = 0.0;                // carrier, Hz
  double bandwidth = 0.0;         // B, Hz
  double tx_power = 0.0;          // watts
  double noise_psd = 0.0;         // N0, watts/Hz
  double integration_time = 1e-3; // T, seconds

  double energy() const { return tx_power * integration_time; }
  double wavelength() const { return kSpeedOfLight / f0; }
};

void validate_signal(const SignalSpec& signal);

enum class Wavefront { NearField, FarField };
enum class BandModel { Wideband, Narrowband };

/// Wavefront model x band model selector. All four combinations are legal.
struct ModelVariant {
  Wavefront wavefront = Wavefront::NearField;
  BandModel band = BandModel::Wideband;
};

std::string to_string(Wavefront w);
std::string to_string(BandModel b);
/// Short code used on the command line: nf-wb, nf-nb, ff-wb, ff-nb.
std::string variant_code(const ModelVariant& v);
ModelVariant variant_from_code(const std::string& code);

/// Exact and plane-wave-decomposed propagation delays for one scene.
///
/// Exact delays are per channel and element. The decomposition splits each
/// leg into a macroscopic phase-center delay, a per-antenna terminal excess
/// and a per-element surface excess. Angle conventions: xi_in/xi_out are the
/// local-frame propagation continuation directions Q^T (x - x_T) and
/// Q^T (x - x_R); zeta_t/zeta_r are the global directions from the surface
/// to the respective phase centers. With these orientations the textbook
/// plus-sign excess-delay formulas hold and the recomposition
/// tau_0 + dtau_l + dtau_nm matches the exact delay to Fresnel order.
struct DelaySet {
  Eigen::MatrixXd tau_in;    // L x (N*M), seconds
  Eigen::MatrixXd tau_out;   // L x (N*M), seconds
  double tau_in_0 = 0.0;     // macroscopic Tx->surface delay
  double tau_out_0 = 0.0;    // macroscopic surface->Rx delay
  Eigen::VectorXd dtau_in_l;   // L, terminal excess (incoming leg)
  Eigen::VectorXd dtau_out_l;  // L, terminal excess (outgoing leg)
  Eigen::VectorXd dtau_in_nm;  // N*M, surface excess (incoming leg)
  Eigen::VectorXd dtau_out_nm; // N*M, surface excess (outgoing leg)
  SphericalDirection xi_in, xi_out;   // local frame
  SphericalDirection zeta_t, zeta_r;  // global frame
};

/// tau^i = |x_nm - x_T,l| / c and tau^o = |x_R,l - x_nm| / c per channel and
/// element. Throws domain_error when an element coincides with an antenna.
DelaySet exact_delays(const Pose& pose, const RisLattice& lattice,
                      const TerminalGeometry& terminal);

/// Macroscopic + excess decomposition (plane-wave linearization).
/// Throws domain_error when the pose coincides with a phase center.
DelaySet ff_decomposition(const Pose& pose, const RisLattice& lattice,
                          const TerminalGeometry& terminal);

/// Both of the above in one structure.
DelaySet make_delay_set(const Pose& pose, const RisLattice& lattice,
                        const TerminalGeometry& terminal);

/// Complex reflection amplitude including two-leg spreading loss.
struct Reflectivity {
  std::complex<double> rho;     // includes path loss, |rho| > 0
  double residual_phase = 0.0;  // delta, radians (fixed, not estimated)
};

/// Radar-equation amplitude through the two phase-center ranges:
/// |rho| = sqrt(c^2 gamma_elem / ((4 pi)^3 f0^2 r_in^2 r_out^2)),
/// phase = residual_phase.
Reflectivity path_loss(const Pose& pose, const TerminalGeometry& terminal,
                       const RisLattice& lattice, const SignalSpec& signal,
                       double residual_phase = 0.0);

/// Flat baseband spectrum: |G(f)|^2 = E/B for |f| <= B/2, zero outside,
/// zero phase.
std::complex<double> spectrum(const SignalSpec& signal, double f);

/// beta(f | Phi) = rho * sum_nm exp(j Phi_nm) exp(-j 2 pi (f0+f) (dtau_in_nm
/// + dtau_out_nm)). Uses the excess-delay fields of `delays`.
std::complex<double> reflection_coefficient(double f0, double f,
                                            const Eigen::VectorXd& phases,
                                            const DelaySet& delays,
                                            const Reflectivity& reflectivity);

/// Noiseless observation a(f, theta | Phi) stacked over the L channels.
/// Out-of-band f returns the zero vector. The wavefront member of `variant`
/// picks exact vs linearized delays, the band member picks whether the
/// surface response is evaluated at f0+f or frozen at the carrier.
Eigen::VectorXcd model_vector(double f, const Pose& pose,
                              const Eigen::VectorXd& phases,
                              const SignalSpec& signal,
                              const TerminalGeometry& terminal,
                              const RisLattice& lattice,
                              const ModelVariant& variant);

}  // namespace risbound
