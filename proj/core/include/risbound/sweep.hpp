// SPDX-License-Identifier: Apache-2.0
//
// risbound - Fisher-information pose bounds for RIS-equipped targets
// Copyright (C) 2026 risbound developers

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "risbound/fim.hpp"
#include "risbound/scenario.hpp"

namespace risbound {

/// One output row. Bound fields hold NaN when the conditioning does not
/// produce them or the computation failed; `error` carries the failure
/// message in the latter case. `bandwidth_hz` gives the row's bandwidth in
/// size sweeps (NaN elsewhere); it is context, not part of the CSV format.
struct SweepRow {
  double sweep_value = 0.0;
  Wavefront wavefront = Wavefront::NearField;
  BandModel band = BandModel::Wideband;
  Conditioning conditioning = Conditioning::Full;
  double peb_m = std::numeric_limits<double>::quiet_NaN();
  double oeb_x_rad = std::numeric_limits<double>::quiet_NaN();
  double oeb_y_rad = std::numeric_limits<double>::quiet_NaN();
  double oeb_z_rad = std::numeric_limits<double>::quiet_NaN();
  double fim_cond = std::numeric_limits<double>::quiet_NaN();
  double bandwidth_hz = std::numeric_limits<double>::quiet_NaN();
  std::string error;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

struct RunOptions {
  int workers = 0;       // 0 = hardware concurrency
  bool verbose = false;  // emit oracle reports / row errors to `log`
  std::ostream* log = nullptr;
};

/// Rows for the scenario as-is (sweep_value = bandwidth), one row per
/// requested conditioning, all derived from a single information matrix.
/// Numerical failures propagate; in verbose mode an oracle report for a
/// size-reduced congruent scenario is written to the log first.
SweepResult run_single(const Scenario& scenario,
                       const std::vector<Conditioning>& conditionings,
                       const RunOptions& options = {});

/// Bandwidth sweep: for every B and variant, rows for all three
/// conditionings. Per-row failures are recorded in the rows and the sweep
/// continues.
SweepResult sweep_bandwidth(const Scenario& scenario,
                            const std::vector<double>& b_values,
                            const std::vector<ModelVariant>& variants,
                            const RunOptions& options = {});

/// Surface-size sweep: rows for every (side, B) pair, sweep_value = side.
/// The lattice is rebuilt per side (N = M = 2 floor(side / 2d)).
SweepResult sweep_ris_size(const Scenario& scenario,
                           const std::vector<double>& sides,
                           const std::vector<double>& b_values,
                           const std::vector<ModelVariant>& variants,
                           const RunOptions& options = {});

/// Keeps only rows whose bandwidth context matches (used to split size
/// sweeps into per-bandwidth files).
SweepResult filter_by_bandwidth(const SweepResult& result, double bandwidth_hz);

std::string csv_header();

/// Writes the fixed-header CSV. NaN fields are left empty. Values carry 12
/// significant digits after the leading one.
void emit_csv(const SweepResult& result, const std::string& path);

/// Reads back a CSV produced by emit_csv.
SweepResult parse_csv(const std::string& path);

enum class SweepKind { Bandwidth, RisSize };

/// Self-contained gnuplot script plotting the CSV (referenced by the given
/// relative path).
void emit_plot_script(const SweepResult& result, const std::string& path,
                      const std::string& csv_relative_path, SweepKind kind);

}  // namespace risbound
