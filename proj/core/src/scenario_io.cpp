// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/scenario_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "risbound/errors.hpp"

namespace risbound {

namespace {

using nlohmann::json;

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw validation_error(key + ": " + what);
}

double get_number(const json& j, const std::string& key, const char* context) {
  if (!j.contains(key)) fail(std::string(context) + "." + key, "missing required key");
  const json& v = j.at(key);
  if (!v.is_number()) fail(std::string(context) + "." + key, "expected a number");
  return v.get<double>();
}

double get_number_or(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  return j.at(key).get<double>();
}

Eigen::Vector3d get_vec3(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 3) fail(key, "expected an array of 3 numbers");
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

Eigen::Vector3d axis_from_string(const std::string& s, const std::string& key) {
  if (s == "x") return Eigen::Vector3d::UnitX();
  if (s == "y") return Eigen::Vector3d::UnitY();
  if (s == "z") return Eigen::Vector3d::UnitZ();
  fail(key, "expected one of \"x\", \"y\", \"z\"");
}

std::vector<Eigen::Vector3d> parse_position_list(const json& arr,
                                                 const std::string& key) {
  if (!arr.is_array() || arr.empty()) fail(key, "expected a non-empty array");
  std::vector<Eigen::Vector3d> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(get_vec3(arr[i], key + "[" + std::to_string(i) + "]"));
  return out;
}

ScenarioFile parse_json(const json& root) {
  Scenario sc;

  // ---- signal ----------------------------------------------------------
  if (!root.contains("signal")) fail("signal", "missing section");
  const json& sig = root.at("signal");
  sc.signal.f0 = get_number(sig, "f0", "signal");
  sc.signal.bandwidth = get_number(sig, "bandwidth", "signal");
  sc.signal.tx_power = dbm_to_watts(get_number(sig, "tx_power", "signal"));
  sc.signal.noise_psd = dbm_to_watts(get_number(sig, "noise_psd", "signal"));
  sc.signal.integration_time = get_number_or(sig, "integration_time", 1e-3);
  validate_signal(sc.signal);

  const double default_spacing = default_element_spacing(sc.signal.f0);

  // ---- lattice ---------------------------------------------------------
  if (!root.contains("lattice")) fail("lattice", "missing section");
  const json& lat = root.at("lattice");
  sc.lattice.spacing = get_number_or(lat, "spacing", default_spacing);
  if (lat.contains("side")) {
    const double side = lat.at("side").get<double>();
    if (!(side >= 2.0 * sc.lattice.spacing))
      fail("lattice.side", "must be at least 2 element spacings");
    sc.lattice.n_count = lattice_count_for_side(side, sc.lattice.spacing);
    sc.lattice.m_count = sc.lattice.n_count;
  } else {
    sc.lattice.n_count = static_cast<int>(get_number(lat, "n_count", "lattice"));
    sc.lattice.m_count = static_cast<int>(get_number(lat, "m_count", "lattice"));
  }
  sc.lattice.gamma_elem = get_number_or(
      lat, "gamma_elem", default_gamma_elem(sc.lattice.spacing, sc.signal.f0));
  validate_lattice(sc.lattice);

  // ---- terminal --------------------------------------------------------
  if (!root.contains("terminal")) fail("terminal", "missing section");
  const json& term = root.at("terminal");
  if (!term.contains("tx_positions")) fail("terminal.tx_positions", "missing");
  std::vector<Eigen::Vector3d> tx =
      parse_position_list(term.at("tx_positions"), "terminal.tx_positions");
  std::vector<Eigen::Vector3d> rx;
  if (term.contains("rx_positions")) {
    rx = parse_position_list(term.at("rx_positions"), "terminal.rx_positions");
  } else if (term.contains("rx_grid")) {
    const json& g = term.at("rx_grid");
    const int rows = static_cast<int>(get_number(g, "rows", "terminal.rx_grid"));
    const int cols = static_cast<int>(get_number(g, "cols", "terminal.rx_grid"));
    if (rows < 1 || cols < 1) fail("terminal.rx_grid", "rows/cols must be >= 1");
    const double spacing = get_number_or(g, "spacing", default_spacing);
    Eigen::Vector3d axis_a = Eigen::Vector3d::UnitY();
    Eigen::Vector3d axis_b = Eigen::Vector3d::UnitZ();
    if (g.contains("axes")) {
      const json& ax = g.at("axes");
      if (!ax.is_array() || ax.size() != 2)
        fail("terminal.rx_grid.axes", "expected two axis names");
      axis_a = axis_from_string(ax[0].get<std::string>(), "terminal.rx_grid.axes");
      axis_b = axis_from_string(ax[1].get<std::string>(), "terminal.rx_grid.axes");
    }
    Eigen::Vector3d center = Eigen::Vector3d::Zero();
    if (g.contains("center")) center = get_vec3(g.at("center"), "terminal.rx_grid.center");
    rx = make_antenna_grid(rows, cols, spacing, axis_a, axis_b, center);
  } else {
    fail("terminal", "needs rx_positions or rx_grid");
  }
  std::vector<std::pair<int, int>> channels;
  if (term.contains("channels") && term.at("channels").is_array()) {
    for (std::size_t i = 0; i < term.at("channels").size(); ++i) {
      const json& c = term.at("channels")[i];
      if (!c.is_array() || c.size() != 2)
        fail("terminal.channels[" + std::to_string(i) + "]",
             "expected a [tx_index, rx_index] pair");
      channels.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }  // default / "all_pairs": expanded by make_terminal
  sc.terminal = make_terminal(std::move(tx), std::move(rx), std::move(channels));
  validate_terminal(sc.terminal);

  // ---- pose ------------------------------------------------------------
  if (!root.contains("pose")) fail("pose", "missing section");
  const json& pose = root.at("pose");
  if (!pose.contains("position")) fail("pose.position", "missing");
  sc.pose.position = get_vec3(pose.at("position"), "pose.position");
  if (pose.contains("orientation")) {
    const Eigen::Vector3d g = get_vec3(pose.at("orientation"), "pose.orientation");
    sc.pose.orientation = {g[0], g[1], g[2]};
  }

  // ---- variant ---------------------------------------------------------
  if (root.contains("variant")) {
    const json& v = root.at("variant");
    const std::string wf = v.value("wavefront", "nearfield");
    if (wf == "nearfield") sc.variant.wavefront = Wavefront::NearField;
    else if (wf == "farfield") sc.variant.wavefront = Wavefront::FarField;
    else fail("variant.wavefront", "expected \"nearfield\" or \"farfield\"");
    const std::string band = v.value("band", "wideband");
    if (band == "wideband") sc.variant.band = BandModel::Wideband;
    else if (band == "narrowband") sc.variant.band = BandModel::Narrowband;
    else fail("variant.band", "expected \"wideband\" or \"narrowband\"");
  }

  // ---- phase mode ------------------------------------------------------
  if (root.contains("phase_mode")) {
    const json& pm = root.at("phase_mode");
    if (pm.is_object() && pm.contains("external")) {
      sc.phase_mode = PhaseMode::External;
      sc.phase_file = pm.at("external").get<std::string>();
    } else if (pm.is_string()) {
      const std::string s = pm.get<std::string>();
      if (s == "nf") sc.phase_mode = PhaseMode::NF;
      else if (s == "ff") sc.phase_mode = PhaseMode::FF;
      else if (s == "matched") sc.phase_mode = PhaseMode::Matched;
      else fail("phase_mode", "expected \"nf\", \"ff\", \"matched\" or {\"external\": path}");
    } else {
      fail("phase_mode", "expected a string or {\"external\": path}");
    }
  }

  // ---- quadrature ------------------------------------------------------
  if (root.contains("quadrature")) {
    const json& q = root.at("quadrature");
    sc.quadrature.nodes = static_cast<int>(get_number_or(q, "nodes", 129));
    sc.quadrature.refinement = get_number_or(q, "refinement", 1e-8);
    if (q.contains("rule") && q.at("rule").get<std::string>() != "gauss_legendre")
      fail("quadrature.rule", "only \"gauss_legendre\" is available");
  }
  validate_quadrature(sc.quadrature);

  // ---- conditioning ----------------------------------------------------
  if (root.contains("conditioning"))
    sc.conditioning = conditioning_from_string(root.at("conditioning").get<std::string>());

  validate_scenario(sc);

  ScenarioFile out;
  out.scenario = std::move(sc);
  if (root.contains("sweep")) {
    const json& sw = root.at("sweep");
    if (sw.contains("b_values"))
      out.sweep.b_values = sw.at("b_values").get<std::vector<double>>();
    if (sw.contains("sides"))
      out.sweep.sides = sw.at("sides").get<std::vector<double>>();
  }
  return out;
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text, const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw validation_error(origin + ": " + e.what());
  }
  try {
    return parse_json(root);
  } catch (const json::exception& e) {
    throw validation_error(origin + ": " + e.what());
  }
}

ScenarioFile load_scenario_file(const std::string& path_or_name) {
  if (const char* text = bundled_scenario_text(path_or_name))
    return parse_scenario_text(text, "bundled scenario " + path_or_name);
  std::ifstream in(path_or_name);
  if (!in)
    throw validation_error("scenario: cannot open '" + path_or_name +
                           "' (and it is not a bundled scenario name)");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path_or_name);
}

Scenario load_scenario(const std::string& path_or_name) {
  return load_scenario_file(path_or_name).scenario;
}

Scenario reduce_scenario(const Scenario& scenario) {
  Scenario small = scenario;
  small.lattice.n_count = std::min(scenario.lattice.n_count, 8);
  small.lattice.m_count = std::min(scenario.lattice.m_count, 8);

  const auto& rx = scenario.terminal.rx_positions;
  std::vector<Eigen::Vector3d> rx_small;
  const std::size_t stride = (rx.size() + 15) / 16;
  for (std::size_t i = 0; i < rx.size(); i += stride) rx_small.push_back(rx[i]);
  small.terminal = make_terminal(scenario.terminal.tx_positions, rx_small);
  return small;
}

}  // namespace risbound
