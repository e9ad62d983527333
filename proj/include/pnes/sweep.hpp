// Copyright 2026 The pnes-decoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnes/channel.hpp"
#include "pnes/entanglement.hpp"
#include "pnes/states.hpp"

namespace pnes {

/// Which twin-beam reference a state is compared against.
enum class MatchKind { energy, entanglement, both };

std::string_view to_string(MatchKind kind);
MatchKind match_kind_from_string(std::string_view name);

/// Which grid points get the D → D+step convergence recomputation.
enum class ConvergenceCheck { none, first, all };

std::string_view to_string(ConvergenceCheck check);
ConvergenceCheck convergence_check_from_string(std::string_view name);

/// 10 equally spaced B/A values from 0.05 to 0.50.
std::vector<double> default_b_over_a_grid();

struct SweepConfig {
  std::string state = "psi01:c1sq=0.5";
  MatchKind match_kind = MatchKind::both;
  /// Measure used for entanglement matching; entropy reproduces the
  /// (ε₀, E₀) pairings of the reference PSSV states.
  MeasureKind entanglement_measure = MeasureKind::entropy;
  std::vector<double> b_over_a = default_b_over_a_grid();
  CutoffPolicy cutoff;
  ConvergenceCheck convergence = ConvergenceCheck::all;
  double negativity_threshold = kNegativityThreshold;
  double gamma = 1.0;
  std::string csv_path;
  std::string svg_path;
};

/// Throws InvalidInput if the grid is empty, not strictly increasing or leaves (0, 1).
void validate(const SweepConfig& config);

/// Reads a JSON config whose keys mirror SweepConfig. Missing keys keep defaults.
SweepConfig load_sweep_config(const std::filesystem::path& path);

struct SweepRecord {
  double b_over_a = 0.0;
  double n_t = 0.0;
  MatchKind match = MatchKind::energy;
  double r_matched = 0.0;
  double t_g = 0.0;
  double energy_at_tg = 0.0;
  double n_0 = 0.0;
  double n_r = 0.0;
  double n_g = 0.0;
  std::optional<double> ratio_r0;
  std::optional<double> ratio_rg;
  int cutoff = 0;
  std::optional<double> conv_delta;
  /// Empty on success; otherwise the reason this point failed.
  std::string error;
  /// The failure was a cutoff or convergence policy violation.
  bool policy_failure = false;

  bool ok() const noexcept { return error.empty(); }
};

/// Denominators at or below this make a ratio undefined.
inline constexpr double kRatioDenominatorFloor = 1e-12;

std::optional<double> safe_ratio(double numerator, double denominator);

/// Residual negativity of the state at the separation time of each matched
/// twin beam, for every B/A in the grid. Records are ordered by grid index,
/// then energy before entanglement matching. Failing points become error
/// records and the sweep continues.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

struct Fig1Series {
  std::string panel;  ///< "pssv" or "psi01"
  std::string label;
  std::string state;
};

/// The five reference states: PSSV (ε₀ = 0.1, E₀ = 0.013) and (1.0, 0.3),
/// with E₀ the per-mode mean photon number, and ψ01 with |c1|² = 0.5, 0.25, 0.05.
std::vector<Fig1Series> fig1_series();

struct Fig1Config {
  std::vector<double> b_over_a = default_b_over_a_grid();
  CutoffPolicy cutoff;
  ConvergenceCheck convergence = ConvergenceCheck::all;
  MeasureKind entanglement_measure = MeasureKind::entropy;
  std::filesystem::path out_dir = "results";
  bool write_svg = true;
};

struct Fig1SeriesResult {
  Fig1Series series;
  std::vector<SweepRecord> records;
};

struct Fig1Result {
  std::vector<Fig1SeriesResult> series;
  std::vector<std::filesystem::path> files;
};

/// Runs both matchings for every reference state and writes
/// fig1_{pssv,psi01}_{energy,entanglement}.csv plus fig1.svg into out_dir.
Fig1Result fig1(const Fig1Config& config);

/// Same computation without touching the filesystem.
std::vector<Fig1SeriesResult> fig1_data(const Fig1Config& config);

}  // namespace pnes
