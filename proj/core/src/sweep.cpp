// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#include "risbound/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "risbound/errors.hpp"
#include "risbound/oracle.hpp"
#include "risbound/scenario_io.hpp"

namespace risbound {

namespace {

const std::vector<Conditioning> kAllConditionings = {
    Conditioning::Full, Conditioning::KnownOrientation,
    Conditioning::KnownPosition};

SweepRow make_row(double sweep_value, const ModelVariant& variant,
                  Conditioning cond, double bandwidth_hz) {
  SweepRow row;
  row.sweep_value = sweep_value;
  row.wavefront = variant.wavefront;
  row.band = variant.band;
  row.conditioning = cond;
  row.bandwidth_hz = bandwidth_hz;
  return row;
}

void fill_row_from_fim(SweepRow& row, const Fim& fim) {
  try {
    switch (row.conditioning) {
      case Conditioning::Full:
        row.fim_cond = condition_number(fim.matrix);
        row.peb_m = peb(fim, false);
        row.oeb_x_rad = oeb(fim, Axis::X, false);
        row.oeb_y_rad = oeb(fim, Axis::Y, false);
        row.oeb_z_rad = oeb(fim, Axis::Z, false);
        break;
      case Conditioning::KnownOrientation:
        row.fim_cond = condition_number(fim.xx());
        row.peb_m = peb(fim, true);
        break;
      case Conditioning::KnownPosition:
        row.fim_cond = condition_number(fim.gammagamma());
        row.oeb_x_rad = oeb(fim, Axis::X, true);
        row.oeb_y_rad = oeb(fim, Axis::Y, true);
        row.oeb_z_rad = oeb(fim, Axis::Z, true);
        break;
    }
  } catch (const numerical_error& e) {
    row.error = e.what();
  }
}

/// Rows for one (scenario, variant) point; a FIM assembly failure marks
/// every requested row.
void append_point(SweepResult& out, const Scenario& scenario,
                  const ModelVariant& variant, double sweep_value,
                  double bandwidth_hz,
                  const std::vector<Conditioning>& conds,
                  const RunOptions& options, bool propagate_errors) {
  Fim fim;
  bool have_fim = false;
  std::string assembly_error;
  try {
    fim = assemble_fim(scenario, variant, scenario.quadrature, options.workers);
    have_fim = true;
  } catch (const numerical_error& e) {
    if (propagate_errors) throw;
    assembly_error = e.what();
  }
  for (const Conditioning cond : conds) {
    SweepRow row = make_row(sweep_value, variant, cond, bandwidth_hz);
    if (have_fim) {
      fill_row_from_fim(row, fim);
      if (propagate_errors && !row.error.empty())
        throw numerical_error(row.error);
    } else {
      row.error = assembly_error;
    }
    if (options.verbose && options.log && !row.error.empty())
      *options.log << "row error (" << to_string(row.wavefront) << ", "
                   << to_string(row.band) << ", " << to_string(row.conditioning)
                   << ", value " << sweep_value << "): " << row.error << "\n";
    out.rows.push_back(std::move(row));
  }
}

void verbose_oracle_report(const Scenario& scenario, const RunOptions& options) {
  if (!options.verbose || !options.log) return;
  const Scenario small = reduce_scenario(scenario);
  const ModelVariant variant = scenario.variant;
  const Eigen::VectorXd phases = make_phase_config(small, variant).phases;
  const double f = 0.25 * small.signal.bandwidth;
  const JacobianMethod method = variant.wavefront == Wavefront::NearField
                                    ? JacobianMethod::Analytic
                                    : JacobianMethod::FiniteDifference;
  const ModelJacobian production =
      model_jacobian(f, small.pose, phases, small, variant, method);
  const FdJacobianResult fd =
      fd_model_jacobian(f, small.pose, phases, small, variant);
  OracleReport report = compare_jacobians(production, fd.jacobian);
  report.converged = fd.report.converged;
  *options.log << to_string(report) << "\n";
}

std::string format_value(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

double parse_value(const std::string& s) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  return std::strtod(s.c_str(), nullptr);
}

}  // namespace

SweepResult run_single(const Scenario& scenario,
                       const std::vector<Conditioning>& conditionings,
                       const RunOptions& options) {
  validate_scenario(scenario);
  verbose_oracle_report(scenario, options);
  SweepResult out;
  const auto conds =
      conditionings.empty() ? std::vector<Conditioning>{scenario.conditioning}
                            : conditionings;
  append_point(out, scenario, scenario.variant, scenario.signal.bandwidth,
               std::numeric_limits<double>::quiet_NaN(), conds, options,
               /*propagate_errors=*/true);
  return out;
}

SweepResult sweep_bandwidth(const Scenario& scenario,
                            const std::vector<double>& b_values,
                            const std::vector<ModelVariant>& variants,
                            const RunOptions& options) {
  validate_scenario(scenario);
  if (b_values.empty())
    throw validation_error("sweep_bandwidth: empty bandwidth grid");
  for (const double b : b_values)
    if (!(b > 0.0) || !(b < 2.0 * scenario.signal.f0))
      throw validation_error("sweep_bandwidth: bandwidth values must lie in (0, 2*f0)");

  SweepResult out;
  for (const double b : b_values) {
    Scenario point = scenario;
    point.signal.bandwidth = b;
    for (const ModelVariant& variant : variants)
      append_point(out, point, variant, b,
                   std::numeric_limits<double>::quiet_NaN(), kAllConditionings,
                   options, /*propagate_errors=*/false);
  }
  return out;
}

SweepResult sweep_ris_size(const Scenario& scenario,
                           const std::vector<double>& sides,
                           const std::vector<double>& b_values,
                           const std::vector<ModelVariant>& variants,
                           const RunOptions& options) {
  validate_scenario(scenario);
  if (sides.empty()) throw validation_error("sweep_ris_size: empty side grid");
  for (const double side : sides)
    if (!(side >= 2.0 * scenario.lattice.spacing))
      throw validation_error(
          "sweep_ris_size: sides must be at least 2 element spacings");

  SweepResult out;
  for (const double side : sides) {
    for (const double b : b_values) {
      Scenario point = scenario;
      point.signal.bandwidth = b;
      resize_lattice_for_side(point, side);
      for (const ModelVariant& variant : variants)
        append_point(out, point, variant, side, b, kAllConditionings, options,
                     /*propagate_errors=*/false);
    }
  }
  return out;
}

SweepResult filter_by_bandwidth(const SweepResult& result, double bandwidth_hz) {
  SweepResult out;
  for (const SweepRow& row : result.rows)
    if (row.bandwidth_hz == bandwidth_hz) out.rows.push_back(row);
  return out;
}

std::string csv_header() {
  return "sweep_value,wavefront,band,conditioning,peb_m,oeb_x_rad,oeb_y_rad,"
         "oeb_z_rad,fim_cond";
}

void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw validation_error("emit_csv: cannot open '" + path + "' for writing");
  out << csv_header() << "\n";
  for (const SweepRow& row : result.rows) {
    out << format_value(row.sweep_value) << ',' << to_string(row.wavefront)
        << ',' << to_string(row.band) << ',' << to_string(row.conditioning)
        << ',' << format_value(row.peb_m) << ',' << format_value(row.oeb_x_rad)
        << ',' << format_value(row.oeb_y_rad) << ','
        << format_value(row.oeb_z_rad) << ',' << format_value(row.fim_cond)
        << "\n";
  }
  if (!out) throw validation_error("emit_csv: write to '" + path + "' failed");
}

SweepResult parse_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("parse_csv: cannot open '" + path + "'");
  std::string line;
  if (!std::getline(in, line))
    throw validation_error("parse_csv: '" + path + "' is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != csv_header())
    throw validation_error("parse_csv: '" + path + "' has an unexpected header");

  SweepResult out;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    while (fields.size() < 9) fields.emplace_back();
    if (fields.size() != 9)
      throw validation_error("parse_csv: '" + path + "' line " +
                             std::to_string(line_no) + ": expected 9 fields");
    SweepRow row;
    row.sweep_value = parse_value(fields[0]);
    row.wavefront = fields[1] == "farfield" ? Wavefront::FarField
                                            : Wavefront::NearField;
    row.band = fields[2] == "narrowband" ? BandModel::Narrowband
                                         : BandModel::Wideband;
    row.conditioning = conditioning_from_string(fields[3]);
    row.peb_m = parse_value(fields[4]);
    row.oeb_x_rad = parse_value(fields[5]);
    row.oeb_y_rad = parse_value(fields[6]);
    row.oeb_z_rad = parse_value(fields[7]);
    row.fim_cond = parse_value(fields[8]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

void emit_plot_script(const SweepResult& result, const std::string& path,
                      const std::string& csv_relative_path, SweepKind kind) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw validation_error("emit_plot_script: cannot open '" + path + "'");

  out << "# gnuplot script generated by risbound\n"
      << "set datafile separator ','\n"
      << "set key outside\n"
      << "set grid\n"
      << "set logscale y\n"
      << "csv = '" << csv_relative_path << "'\n";

  struct Curve {
    const char* wf;
    const char* band;
    const char* cond;
    std::string title;
  };
  std::vector<Curve> curves;
  for (const SweepRow& row : result.rows) {
    Curve c{to_string(row.wavefront) == "nearfield" ? "nearfield" : "farfield",
            to_string(row.band) == "wideband" ? "wideband" : "narrowband",
            nullptr, ""};
    const std::string cond = to_string(row.conditioning);
    c.cond = cond == "full" ? "full"
             : cond == "known-orientation" ? "known-orientation"
                                           : "known-position";
    c.title = std::string(c.wf) + " " + c.band + ", " + c.cond;
    bool seen = false;
    for (const Curve& k : curves)
      if (k.title == c.title) { seen = true; break; }
    if (!seen) curves.push_back(c);
  }

  const bool size_sweep = kind == SweepKind::RisSize;
  const char* value_col = size_sweep ? "$7" : "$5";  // oeb_y vs peb
  out << "set xlabel '" << (size_sweep ? "surface side [m]" : "bandwidth [Hz]")
      << "'\n"
      << "set ylabel '" << (size_sweep ? "OEB psi_y [rad]" : "PEB [m]")
      << "'\n"
      << "plot \\\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const Curve& c = curves[i];
    out << "  csv every ::1 using 1:((strcol(2) eq '" << c.wf
        << "' && strcol(3) eq '" << c.band << "' && strcol(4) eq '" << c.cond
        << "') ? " << value_col << " : 1/0) with linespoints title '"
        << c.title << "'";
    out << (i + 1 == curves.size() ? "\n" : ", \\\n");
  }
  if (!out) throw validation_error("emit_plot_script: write failed");
}

}  // namespace risbound
