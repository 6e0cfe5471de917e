// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include <doctest.h>

#include <random>

#include "risbound/errors.hpp"
#include "risbound/phase_config.hpp"
#include "risbound/quadrature.hpp"
#include "risbound/scenario.hpp"
#include "test_helpers.hpp"

using namespace risbound;
using risbound::testing::make_paper_scenario;
using risbound::testing::make_small_scenario;

TEST_CASE("exact_delays value, symmetry and translation invariance") {
  Scenario s = make_small_scenario();
  // Single tx antenna at the origin; element (0,0) sits at the pose itself.
  const DelaySet ds = exact_delays(s.pose, s.lattice, s.terminal);
  const int k00 = (0 + 4) * 8 + (0 + 4);
  const double expect = std::sqrt(55.25) / kSpeedOfLight;
  CHECK(ds.tau_in(0, k00) == doctest::Approx(expect).epsilon(1e-15));
  CHECK(ds.tau_in(0, k00) == doctest::Approx(2.4794e-8).epsilon(1e-4));

  SUBCASE("monostatic collocated antennas give tau_in == tau_out") {
    const auto mono = make_terminal({{0, 0, 0}}, {{0, 0, 0}});
    const DelaySet m = exact_delays(s.pose, s.lattice, mono);
    CHECK((m.tau_in - m.tau_out).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("translating everything leaves delays unchanged") {
    const Eigen::Vector3d t(3.0, -11.0, 0.5);
    Scenario moved = s;
    moved.pose.position += t;
    std::vector<Eigen::Vector3d> tx = s.terminal.tx_positions;
    std::vector<Eigen::Vector3d> rx = s.terminal.rx_positions;
    for (auto& p : tx) p += t;
    for (auto& p : rx) p += t;
    moved.terminal = make_terminal(tx, rx);
    const DelaySet a = exact_delays(s.pose, s.lattice, s.terminal);
    const DelaySet b = exact_delays(moved.pose, moved.lattice, moved.terminal);
    CHECK((a.tau_in - b.tau_in).cwiseAbs().maxCoeff() < 1e-22);
    CHECK((a.tau_out - b.tau_out).cwiseAbs().maxCoeff() < 1e-22);
  }

  SUBCASE("coincident element and antenna is a domain error") {
    Scenario bad = s;
    bad.pose.position = Eigen::Vector3d::Zero();  // element (0,0) on the tx antenna
    CHECK_THROWS_AS(exact_delays(bad.pose, bad.lattice, bad.terminal), domain_error);
  }
}

TEST_CASE("ff_decomposition excess delays") {
  Scenario s = make_small_scenario();

  SUBCASE("broadside incidence zeroes the surface excess") {
    // Surface above the terminal, facing it: propagation continues along
    // local +z, so phi_i = 0 and every element excess vanishes.
    Scenario b = s;
    b.pose.position = {0, 0, 7.0};
    const DelaySet ds = ff_decomposition(b.pose, b.lattice, b.terminal);
    CHECK(ds.xi_in.phi == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(ds.dtau_in_nm.cwiseAbs().maxCoeff() < 1e-20);
  }

  SUBCASE("in-plane element along x sees +d/c") {
    // Terminal on the local -x side: xi_i = (pi/2, 0).
    Scenario b = s;
    b.pose.position = {9.0, 0, 0};  // tx at origin -> x - x_T along +x
    const DelaySet ds = ff_decomposition(b.pose, b.lattice, b.terminal);
    CHECK(ds.xi_in.phi == doctest::Approx(M_PI / 2).epsilon(1e-12));
    CHECK(ds.xi_in.theta == doctest::Approx(0.0));
    const int k10 = (1 + 4) * 8 + (0 + 4);
    CHECK(ds.dtau_in_nm[k10] ==
          doctest::Approx(b.lattice.spacing / kSpeedOfLight).epsilon(1e-12));
  }

  SUBCASE("recomposition stays within the Fresnel bound at the full scene") {
    Scenario p = make_paper_scenario(0.10, 20);
    const DelaySet ex = exact_delays(p.pose, p.lattice, p.terminal);
    const DelaySet ff = ff_decomposition(p.pose, p.lattice, p.terminal);
    double worst = 0;
    for (int l = 0; l < p.terminal.channel_count(); ++l)
      for (int k = 0; k < p.lattice.size(); ++k) {
        const double rec_in = ff.tau_in_0 + ff.dtau_in_l[l] + ff.dtau_in_nm[k];
        const double rec_out = ff.tau_out_0 + ff.dtau_out_l[l] + ff.dtau_out_nm[k];
        worst = std::max(worst, std::abs(ex.tau_in(l, k) - rec_in) +
                                    std::abs(ex.tau_out(l, k) - rec_out));
      }
    const double aperture = std::sqrt(2.0) * 0.10;
    const double range = (p.pose.position - p.terminal.tx_phase_center).norm();
    const double fresnel = aperture * aperture / (2.0 * range * kSpeedOfLight);
    CHECK(worst < 2.0 * fresnel);
  }

  SUBCASE("recomposition error decays like 1/range") {
    Scenario p = make_paper_scenario(0.10, 8);
    auto worst_error = [&](double scale) {
      Scenario q = p;
      q.pose.position *= scale;
      const DelaySet ex = exact_delays(q.pose, q.lattice, q.terminal);
      const DelaySet ff = ff_decomposition(q.pose, q.lattice, q.terminal);
      double worst = 0;
      for (int l = 0; l < q.terminal.channel_count(); ++l)
        for (int k = 0; k < q.lattice.size(); ++k)
          worst = std::max(
              worst, std::abs(ex.tau_in(l, k) - (ff.tau_in_0 + ff.dtau_in_l[l] +
                                                 ff.dtau_in_nm[k])));
      return worst;
    };
    const double ratio = worst_error(1.0) / worst_error(10.0);
    CHECK(ratio > 5.0);
    CHECK(ratio < 20.0);
  }
}

TEST_CASE("path_loss magnitude and scalings") {
  Scenario s = make_paper_scenario(0.10, 20);
  const Reflectivity r = path_loss(s.pose, s.terminal, s.lattice, s.signal);
  // Independently evaluated radar-equation amplitude for this scene.
  CHECK(std::abs(r.rho) == doctest::Approx(5.252199671507211e-9).epsilon(1e-12));
  CHECK(r.rho.imag() == 0.0);

  SUBCASE("doubling both ranges divides the amplitude by 4") {
    Scenario mono = s;
    mono.terminal = make_terminal({{0, 0, 0}}, {{0, 0, 0}});
    const Reflectivity near =
        path_loss(mono.pose, mono.terminal, mono.lattice, mono.signal);
    Scenario farther = mono;
    farther.pose.position *= 2.0;
    const Reflectivity far2 =
        path_loss(farther.pose, farther.terminal, farther.lattice, farther.signal);
    CHECK(std::abs(far2.rho) == doctest::Approx(std::abs(near.rho) / 4.0).epsilon(1e-13));
  }

  SUBCASE("element cross section scales under a square root") {
    Scenario k = s;
    k.lattice.gamma_elem *= 9.0;
    const Reflectivity r3 = path_loss(k.pose, k.terminal, k.lattice, k.signal);
    CHECK(std::abs(r3.rho) == doctest::Approx(3.0 * std::abs(r.rho)).epsilon(1e-13));
  }

  SUBCASE("residual phase is preserved") {
    const Reflectivity rp = path_loss(s.pose, s.terminal, s.lattice, s.signal, 0.3);
    CHECK(std::arg(rp.rho) == doctest::Approx(0.3).epsilon(1e-13));
  }
}

TEST_CASE("spectrum is flat with unit energy") {
  Scenario s = make_small_scenario();
  const double e_over_b = s.signal.energy() / s.signal.bandwidth;
  CHECK(e_over_b == doctest::Approx(1.9952623149688797e-13).epsilon(1e-14));
  CHECK(std::norm(spectrum(s.signal, 0.0)) == doctest::Approx(e_over_b));
  CHECK(std::norm(spectrum(s.signal, 0.49 * s.signal.bandwidth)) ==
        doctest::Approx(e_over_b));
  CHECK(spectrum(s.signal, 0.6 * s.signal.bandwidth) == std::complex<double>(0, 0));

  // Parseval under the module's own quadrature
  const QuadratureRule rule = map_to_interval(
      gauss_legendre(33), -0.5 * s.signal.bandwidth, 0.5 * s.signal.bandwidth);
  double acc = 0;
  for (int i = 0; i < 33; ++i) acc += rule.weights[i] * std::norm(spectrum(s.signal, rule.nodes[i]));
  CHECK(acc == doctest::Approx(s.signal.energy()).epsilon(1e-12));
}

TEST_CASE("reflection_coefficient coherence and squint") {
  Scenario s = make_paper_scenario(0.10, 4, 10e9);
  const DelaySet ds = ff_decomposition(s.pose, s.lattice, s.terminal);
  const Reflectivity refl = path_loss(s.pose, s.terminal, s.lattice, s.signal);
  const PhaseConfig ff = configure_ff(s.pose, s.lattice, s.terminal, s.signal.f0);

  const std::complex<double> beta0 =
      reflection_coefficient(s.signal.f0, 0.0, ff.phases, ds, refl);
  const double bound = std::abs(refl.rho) * s.lattice.size();
  CHECK(beta0.real() == doctest::Approx(bound).epsilon(1e-13));
  CHECK(std::abs(beta0.imag()) < 1e-15 * s.lattice.size());
  CHECK(std::abs(beta0) == doctest::Approx(1.420194791175550e-5).epsilon(1e-12));

  SUBCASE("band-edge squint loss, frozen") {
    const std::complex<double> edge =
        reflection_coefficient(s.signal.f0, 5e9, ff.phases, ds, refl);
    CHECK(std::abs(edge) < std::abs(beta0));
    CHECK(std::abs(edge) == doctest::Approx(1.336528304041298e-6).epsilon(1e-9));
    CHECK(std::abs(edge) / std::abs(beta0) == doctest::Approx(0.094109).epsilon(1e-4));
  }

  SUBCASE("triangle inequality for random profiles and frequencies") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> uphase(-M_PI, M_PI), uf(-5e9, 5e9);
    for (int trial = 0; trial < 20; ++trial) {
      Eigen::VectorXd phases(s.lattice.size());
      for (int i = 0; i < phases.size(); ++i) phases[i] = uphase(rng);
      const std::complex<double> b =
          reflection_coefficient(s.signal.f0, uf(rng), phases, ds, refl);
      CHECK(std::abs(b) <= bound * (1 + 1e-12));
    }
  }

  SUBCASE("broadside scene with zero phases is flat over frequency") {
    Scenario b = make_small_scenario();
    b.pose.position = {0, 0, 7.0};
    b.terminal = make_terminal({{0, 0, 0}}, {{0, 0, 0}});
    const DelaySet dsb = ff_decomposition(b.pose, b.lattice, b.terminal);
    const Reflectivity rb = path_loss(b.pose, b.terminal, b.lattice, b.signal);
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(b.lattice.size());
    const double flat = std::abs(rb.rho) * b.lattice.size();
    for (const double f : {-4.9e8, 0.0, 2.2e8, 4.9e8})
      CHECK(std::abs(reflection_coefficient(b.signal.f0, f, zero, dsb, rb)) ==
            doctest::Approx(flat).epsilon(1e-12));
  }
}

TEST_CASE("model_vector values and structural properties") {
  Scenario s = make_small_scenario();
  const PhaseConfig nf = configure_nf(s.pose, s.lattice, s.terminal, s.signal.f0);
  const PhaseConfig ff = configure_ff(s.pose, s.lattice, s.terminal, s.signal.f0);
  const double f = 2.5e8;

  SUBCASE("frozen anchors for all four variants") {
    struct Anchor {
      ModelVariant variant;
      const Eigen::VectorXd* phases;
      std::complex<double> a0, a13;
    };
    const Anchor anchors[] = {
        {{Wavefront::NearField, BandModel::Wideband}, &nf.phases,
         {7.944910409474405e-14, 1.273140114156495e-13},
         {3.742538929421173e-14, -1.453329936947113e-13}},
        {{Wavefront::NearField, BandModel::Narrowband}, &nf.phases,
         {8.174618753079925e-14, 1.259441840056786e-13},
         {3.592838924476199e-14, -1.457860273941192e-13}},
        {{Wavefront::FarField, BandModel::Wideband}, &ff.phases,
         {-4.761042527343983e-14, -1.423249890904641e-13},
         {-7.038903136700164e-14, 1.325463668967723e-13}},
        {{Wavefront::FarField, BandModel::Narrowband}, &ff.phases,
         {-5.016466367449967e-14, -1.415206690845637e-13},
         {-6.903502525187447e-14, 1.333370111716597e-13}},
    };
    for (const Anchor& a : anchors) {
      const Eigen::VectorXcd v =
          model_vector(f, s.pose, *a.phases, s, a.variant);
      REQUIRE(v.size() == 16);
      CHECK(std::abs(v[0] - a.a0) < 1e-10 * std::abs(a.a0));
      CHECK(std::abs(v[13] - a.a13) < 1e-10 * std::abs(a.a13));
    }
  }

  SUBCASE("wideband equals narrowband at band center") {
    for (const Wavefront wf : {Wavefront::NearField, Wavefront::FarField}) {
      const Eigen::VectorXd& phases =
          wf == Wavefront::NearField ? nf.phases : ff.phases;
      const Eigen::VectorXcd wb =
          model_vector(0.0, s.pose, phases, s, {wf, BandModel::Wideband});
      const Eigen::VectorXcd nb =
          model_vector(0.0, s.pose, phases, s, {wf, BandModel::Narrowband});
      CHECK((wb - nb).cwiseAbs().maxCoeff() < 1e-15 * wb.cwiseAbs().maxCoeff());
    }
  }

  SUBCASE("out-of-band frequency returns the zero vector") {
    const Eigen::VectorXcd v =
        model_vector(0.51 * s.signal.bandwidth, s.pose, nf.phases, s, s.variant);
    CHECK(v.cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("coherent broadside amplitude equals |rho G| N M") {
    Scenario b = make_small_scenario();
    b.lattice.n_count = b.lattice.m_count = 2;
    b.pose.position = {0, 0, 7.0};
    b.terminal = make_terminal({{0, 0, 0}}, {{0, 0, 0}});
    const Eigen::VectorXd zero = Eigen::VectorXd::Zero(4);
    const Reflectivity rb = path_loss(b.pose, b.terminal, b.lattice, b.signal);
    const Eigen::VectorXcd v = model_vector(
        0.0, b.pose, zero, b, {Wavefront::FarField, BandModel::Wideband});
    const double expect =
        std::abs(rb.rho) * std::abs(spectrum(b.signal, 0.0)) * 4.0;
    CHECK(std::abs(v[0]) == doctest::Approx(expect).epsilon(1e-12));
  }

  SUBCASE("near and far field agree far beyond the Fraunhofer distance") {
    Scenario big = make_paper_scenario(0.10, 4);
    const double aperture = std::sqrt(2.0) * 0.10;
    const double fraunhofer =
        2.0 * aperture * aperture / big.signal.wavelength();
    big.pose.position *= 100.0 * fraunhofer / big.pose.position.norm();
    const PhaseConfig cfg =
        configure_ff(big.pose, big.lattice, big.terminal, big.signal.f0);
    const Eigen::VectorXcd a_nf = model_vector(
        f, big.pose, cfg.phases, big, {Wavefront::NearField, BandModel::Wideband});
    const Eigen::VectorXcd a_ff = model_vector(
        f, big.pose, cfg.phases, big, {Wavefront::FarField, BandModel::Wideband});
    for (int l = 0; l < a_nf.size(); ++l)
      CHECK(std::abs(a_nf[l] - a_ff[l]) < 0.01 * std::abs(a_nf[l]));
  }

  SUBCASE("continuity under a 1e-9 m position perturbation") {
    const Eigen::VectorXcd base = model_vector(f, s.pose, nf.phases, s, s.variant);
    Pose moved = s.pose;
    moved.position += Eigen::Vector3d(1e-9, -1e-9, 1e-9);
    const Eigen::VectorXcd shifted = model_vector(f, moved, nf.phases, s, s.variant);
    CHECK((base - shifted).cwiseAbs().maxCoeff() <
          1e-4 * base.cwiseAbs().maxCoeff());
  }

  SUBCASE("swapping tx and rx roles preserves the observation") {
    // Monostatic: both roles share one 2x2 grid.
    const auto grid = make_antenna_grid(2, 2, s.lattice.spacing,
                                        Eigen::Vector3d::UnitY(),
                                        Eigen::Vector3d::UnitZ());
    Scenario mono = s;
    mono.terminal = make_terminal(grid, grid);
    Scenario swapped = mono;
    std::vector<std::pair<int, int>> reversed;
    for (const auto& [ti, ri] : mono.terminal.channels)
      reversed.emplace_back(ri, ti);
    swapped.terminal = make_terminal(grid, grid, reversed);
    const PhaseConfig cfg =
        configure_nf(mono.pose, mono.lattice, mono.terminal, mono.signal.f0);
    const Eigen::VectorXcd a = model_vector(f, mono.pose, cfg.phases, mono, mono.variant);
    const Eigen::VectorXcd b =
        model_vector(f, swapped.pose, cfg.phases, swapped, swapped.variant);
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-15 * a.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("signal validation") {
  Scenario s = make_small_scenario();
  SignalSpec bad = s.signal;
  bad.bandwidth = 2.1 * bad.f0;
  CHECK_THROWS_AS(validate_signal(bad), validation_error);
  bad = s.signal;
  bad.tx_power = 0;
  CHECK_THROWS_AS(validate_signal(bad), validation_error);
  CHECK_NOTHROW(validate_signal(s.signal));
}

TEST_CASE("variant codes round trip") {
  for (const char* code : {"nf-wb", "nf-nb", "ff-wb", "ff-nb"})
    CHECK(variant_code(variant_from_code(code)) == code);
  CHECK_THROWS_AS(variant_from_code("nf"), validation_error);
}
