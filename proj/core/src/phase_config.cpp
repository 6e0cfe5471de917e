// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/phase_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "risbound/errors.hpp"

namespace risbound {

PhaseConfig configure_nf(const Pose& pose, const RisLattice& lattice,
                         const TerminalGeometry& terminal, double f0) {
  const auto elems = element_positions(pose, lattice);
  PhaseConfig cfg;
  cfg.mode = PhaseConfig::Mode::NF;
  cfg.phases.resize(static_cast<Eigen::Index>(elems.size()));
  const double k = 2.0 * M_PI * f0 / kSpeedOfLight;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const double din = (elems[i] - terminal.tx_phase_center).norm();
    const double dout = (terminal.rx_phase_center - elems[i]).norm();
    if (din == 0.0 || dout == 0.0)
      throw domain_error("configure_nf: element coincides with a phase center");
    cfg.phases[static_cast<Eigen::Index>(i)] = k * (din + dout);
  }
  return cfg;
}

PhaseConfig configure_ff(const Pose& pose, const RisLattice& lattice,
                         const TerminalGeometry& terminal, double f0) {
  const DelaySet ds = ff_decomposition(pose, lattice, terminal);
  PhaseConfig cfg;
  cfg.mode = PhaseConfig::Mode::FF;
  cfg.phases =
      2.0 * M_PI * f0 * (ds.dtau_in_nm + ds.dtau_out_nm);
  return cfg;
}

PhaseConfig load_phase_profile(const std::string& path, const RisLattice& lattice) {
  std::ifstream in(path);
  if (!in)
    throw validation_error("phase profile: cannot open '" + path + "'");
  std::vector<double> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    double v;
    if (!(ls >> v)) {
      // allow blank lines
      std::string rest;
      ls.clear();
      ls >> rest;
      if (rest.empty()) continue;
      throw validation_error("phase profile '" + path + "' line " +
                             std::to_string(line_no) + ": not a number");
    }
    if (!std::isfinite(v))
      throw validation_error("phase profile '" + path + "' line " +
                             std::to_string(line_no) + ": non-finite value");
    values.push_back(v);
  }
  if (static_cast<int>(values.size()) != lattice.size())
    throw validation_error("phase profile '" + path + "': expected " +
                           std::to_string(lattice.size()) + " values, got " +
                           std::to_string(values.size()));
  PhaseConfig cfg;
  cfg.mode = PhaseConfig::Mode::External;
  cfg.phases = Eigen::Map<const Eigen::VectorXd>(values.data(),
                                                 static_cast<Eigen::Index>(values.size()));
  return cfg;
}

}  // namespace risbound
