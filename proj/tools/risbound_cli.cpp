// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers
//
// Command line front end: single-point evaluation, bandwidth and
// surface-size sweeps, and the oracle validation suite.
//
// Exit codes: 0 success, 2 validation failure, 3 numerical failure.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "risbound/errors.hpp"
#include "risbound/oracle.hpp"
#include "risbound/scenario_io.hpp"
#include "risbound/sweep.hpp"

namespace {

using namespace risbound;

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

std::vector<double> parse_number_list(const std::string& text,
                                      const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const double v = std::stod(item, &pos);
    if (pos != item.size())
      throw validation_error(flag + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) throw validation_error(flag + ": empty list");
  return out;
}

std::vector<ModelVariant> parse_variants(const std::string& text) {
  if (text == "all")
    return {{Wavefront::NearField, BandModel::Wideband},
            {Wavefront::NearField, BandModel::Narrowband},
            {Wavefront::FarField, BandModel::Wideband},
            {Wavefront::FarField, BandModel::Narrowband}};
  std::vector<ModelVariant> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(variant_from_code(item));
  }
  if (out.empty()) throw validation_error("--variants: empty list");
  return out;
}

SweepResult filter_conditioning(const SweepResult& result,
                                const std::string& selector) {
  if (selector == "all") return result;
  const Conditioning want = conditioning_from_string(selector);
  SweepResult out;
  for (const SweepRow& row : result.rows)
    if (row.conditioning == want) out.rows.push_back(row);
  return out;
}

void write_outputs(const SweepResult& result, const std::string& out_path,
                   const std::string& plot_path, SweepKind kind) {
  if (out_path.empty()) {
    emit_csv(result, "/dev/stdout");
    return;
  }
  emit_csv(result, out_path);
  if (!plot_path.empty()) {
    const std::filesystem::path csv_rel = std::filesystem::proximate(
        out_path, std::filesystem::path(plot_path).parent_path());
    emit_plot_script(result, plot_path, csv_rel.string(), kind);
  }
}

std::string suffixed_path(const std::string& path, double bandwidth_hz) {
  const std::filesystem::path p(path);
  char label[32];
  std::snprintf(label, sizeof label, "%g", bandwidth_hz / 1e9);
  return (p.parent_path() /
          (p.stem().string() + "_B" + label + "GHz" + p.extension().string()))
      .string();
}

int run_validate(const Scenario& scenario, const RunOptions& options) {
  const Scenario small = reduce_scenario(scenario);
  std::cout << "validation suite on size-reduced scenario ("
            << small.lattice.n_count << "x" << small.lattice.m_count
            << " elements, " << small.terminal.channel_count()
            << " channels)\n";

  const std::vector<ModelVariant> variants = parse_variants("all");
  bool ok = true;

  for (const ModelVariant& variant : variants) {
    const Eigen::VectorXd phases = make_phase_config(small, variant).phases;
    const double f = 0.25 * small.signal.bandwidth;
    const JacobianMethod method = variant.wavefront == Wavefront::NearField
                                      ? JacobianMethod::Analytic
                                      : JacobianMethod::FiniteDifference;
    const ModelJacobian production =
        model_jacobian(f, small.pose, phases, small, variant, method);
    const FdJacobianResult fd =
        fd_model_jacobian(f, small.pose, phases, small, variant);
    OracleReport jac_report = compare_jacobians(production, fd.jacobian);
    jac_report.converged = fd.report.converged;
    const bool jac_ok = jac_report.converged &&
                        jac_report.max_relative_error < 1e-6;

    const Fim fast = assemble_fim(small, variant, small.quadrature, options.workers);
    const Fim slow = trapezoid_fim(small, variant, 1024);
    const double fim_err = relative_frobenius(fast.matrix, slow.matrix);
    const bool fim_ok = fim_err < 1e-4;

    std::cout << "[" << variant_code(variant) << "] jacobian vs oracle: "
              << jac_report.max_relative_error
              << (jac_ok ? " (ok)" : " (FAIL)")
              << "; fim vs trapezoid oracle: " << fim_err
              << (fim_ok ? " (ok)" : " (FAIL)") << "\n";
    if (options.verbose) std::cout << to_string(jac_report) << "\n";
    ok = ok && jac_ok && fim_ok;
  }
  if (!ok) {
    std::cerr << "validation failed\n";
    return kExitNumerical;
  }
  std::cout << "validation passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pose error bounds for a sensing terminal observing a "
               "reconfigurable reflecting surface"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string scenario_path;
  std::string out_path, plot_path;
  std::string variants_text = "";
  std::string conditioning_text = "";
  std::string b_values_text, sides_text;
  int quadrature_nodes = 0;
  int workers = 0;
  bool verbose = false;

  app.add_option("--scenario", scenario_path,
                 "Scenario file or bundled name (paper_fig2a, paper_fig2b, "
                 "paper_fig3)")
      ->required();
  app.add_option("--out", out_path, "Output CSV path");
  app.add_option("--plot", plot_path, "Output gnuplot script path");
  app.add_option("--variants", variants_text,
                 "all or comma list of nf-wb,nf-nb,ff-wb,ff-nb");
  app.add_option("--conditioning", conditioning_text,
                 "full|known-orientation|known-position|all");
  app.add_option("--quadrature-nodes", quadrature_nodes,
                 "Override the starting Gauss-Legendre node count");
  app.add_option("--workers", workers, "Worker thread count (0 = hardware)");
  app.add_flag("--verbose", verbose, "Emit oracle reports and row errors");

  CLI::App* cmd_single = app.add_subcommand("single", "One scenario point");
  CLI::App* cmd_sweep_b =
      app.add_subcommand("sweep-bandwidth", "Sweep the signal bandwidth");
  cmd_sweep_b->add_option("--b-values", b_values_text,
                          "Comma list of bandwidths in Hz");
  CLI::App* cmd_sweep_s =
      app.add_subcommand("sweep-ris-size", "Sweep the surface side length");
  cmd_sweep_s->add_option("--sides", sides_text, "Comma list of sides in m");
  cmd_sweep_s->add_option("--b-values", b_values_text,
                          "Comma list of bandwidths in Hz");
  CLI::App* cmd_validate =
      app.add_subcommand("validate", "Run the oracle validation suite");

  CLI11_PARSE(app, argc, argv);

  try {
    ScenarioFile file = load_scenario_file(scenario_path);
    Scenario& scenario = file.scenario;
    if (quadrature_nodes > 0) scenario.quadrature.nodes = quadrature_nodes;
    validate_scenario(scenario);

    RunOptions options;
    options.workers = workers;
    options.verbose = verbose;
    options.log = &std::cerr;

    if (cmd_validate->parsed()) return run_validate(scenario, options);

    if (cmd_single->parsed()) {
      std::vector<Conditioning> conds;
      if (conditioning_text == "all")
        conds = {Conditioning::Full, Conditioning::KnownOrientation,
                 Conditioning::KnownPosition};
      else if (!conditioning_text.empty())
        conds = {conditioning_from_string(conditioning_text)};
      Scenario point = scenario;
      if (!variants_text.empty()) {
        const auto variants = parse_variants(variants_text);
        SweepResult all;
        for (const ModelVariant& v : variants) {
          point.variant = v;
          const SweepResult r = run_single(point, conds, options);
          all.rows.insert(all.rows.end(), r.rows.begin(), r.rows.end());
        }
        write_outputs(all, out_path, plot_path, SweepKind::Bandwidth);
      } else {
        write_outputs(run_single(point, conds, options), out_path, plot_path,
                      SweepKind::Bandwidth);
      }
      return 0;
    }

    // Sweep grids: explicit flags win, then scenario-file defaults, then
    // built-in grids.
    std::vector<double> b_values;
    if (!b_values_text.empty())
      b_values = parse_number_list(b_values_text, "--b-values");
    else if (!file.sweep.b_values.empty())
      b_values = file.sweep.b_values;

    if (cmd_sweep_b->parsed()) {
      if (b_values.empty())
        for (int i = 1; i <= 10; ++i) b_values.push_back(i * 1e9);
      const auto variants =
          parse_variants(variants_text.empty() ? "all" : variants_text);
      SweepResult result = sweep_bandwidth(scenario, b_values, variants, options);
      result = filter_conditioning(
          result, conditioning_text.empty() ? "all" : conditioning_text);
      write_outputs(result, out_path, plot_path, SweepKind::Bandwidth);
      return 0;
    }

    if (cmd_sweep_s->parsed()) {
      std::vector<double> sides;
      if (!sides_text.empty())
        sides = parse_number_list(sides_text, "--sides");
      else if (!file.sweep.sides.empty())
        sides = file.sweep.sides;
      else
        sides = {0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35};
      if (b_values.empty()) b_values = {1e9, 4e9, 8e9};

      std::vector<ModelVariant> variants =
          variants_text.empty() ? std::vector<ModelVariant>{scenario.variant}
                                : parse_variants(variants_text);
      SweepResult result =
          sweep_ris_size(scenario, sides, b_values, variants, options);
      result = filter_conditioning(
          result, conditioning_text.empty() ? "all" : conditioning_text);
      if (b_values.size() == 1 || out_path.empty()) {
        write_outputs(result, out_path, plot_path, SweepKind::RisSize);
      } else {
        for (const double b : b_values) {
          const SweepResult part = filter_by_bandwidth(result, b);
          const std::string part_csv = suffixed_path(out_path, b);
          emit_csv(part, part_csv);
          if (!plot_path.empty()) {
            const std::string part_plot = suffixed_path(plot_path, b);
            const std::filesystem::path csv_rel = std::filesystem::proximate(
                part_csv, std::filesystem::path(part_plot).parent_path());
            emit_plot_script(part, part_plot, csv_rel.string(), SweepKind::RisSize);
          }
        }
      }
      return 0;
    }
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    if (e.condition_number)
      std::cerr << "  condition number: " << *e.condition_number << "\n";
    if (e.null_space)
      std::cerr << "  null-space direction (x, y, z, psi_x, psi_y, psi_z): "
                << e.null_space->transpose() << "\n";
    return kExitNumerical;
  }
  return 0;
}
