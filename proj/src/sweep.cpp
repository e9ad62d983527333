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

#include "pnes/sweep.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pnes/errors.hpp"
#include "pnes/gaussian.hpp"
#include "pnes/report.hpp"
#include "pnes/state_spec.hpp"

namespace pnes {

std::string_view to_string(MatchKind kind) {
  switch (kind) {
    case MatchKind::energy: return "energy";
    case MatchKind::entanglement: return "entanglement";
    case MatchKind::both: return "both";
  }
  return "unknown";
}

MatchKind match_kind_from_string(std::string_view name) {
  if (name == "energy") return MatchKind::energy;
  if (name == "entanglement") return MatchKind::entanglement;
  if (name == "both") return MatchKind::both;
  throw InvalidInput("unknown match kind '" + std::string(name) + "'");
}

std::string_view to_string(ConvergenceCheck check) {
  switch (check) {
    case ConvergenceCheck::none: return "none";
    case ConvergenceCheck::first: return "first";
    case ConvergenceCheck::all: return "all";
  }
  return "unknown";
}

ConvergenceCheck convergence_check_from_string(std::string_view name) {
  if (name == "none") return ConvergenceCheck::none;
  if (name == "first") return ConvergenceCheck::first;
  if (name == "all") return ConvergenceCheck::all;
  throw InvalidInput("unknown convergence check '" + std::string(name) + "'");
}

std::vector<double> default_b_over_a_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(0.05 * i);
  return grid;
}

void validate(const SweepConfig& config) {
  if (config.b_over_a.empty()) throw InvalidInput("B/A grid is empty");
  for (std::size_t i = 0; i < config.b_over_a.size(); ++i) {
    const double v = config.b_over_a[i];
    if (!(v > 0.0 && v < 1.0)) {
      throw InvalidInput("B/A value " + format_number(v) + " outside (0, 1)");
    }
    if (i > 0 && !(v > config.b_over_a[i - 1])) {
      throw InvalidInput("B/A grid must be strictly increasing");
    }
  }
  if (!(config.gamma > 0.0)) throw InvalidInput("damping rate must be positive");
  if (!(config.negativity_threshold > 0.0)) throw InvalidInput("negativity threshold must be positive");
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed config " + path.string() + ": " + e.what());
  }
  SweepConfig config;
  try {
    if (doc.contains("state")) config.state = doc["state"].get<std::string>();
    if (doc.contains("match_kind")) {
      config.match_kind = match_kind_from_string(doc["match_kind"].get<std::string>());
    }
    if (doc.contains("entanglement_measure")) {
      config.entanglement_measure =
          measure_kind_from_string(doc["entanglement_measure"].get<std::string>());
    }
    if (doc.contains("b_over_a")) config.b_over_a = doc["b_over_a"].get<std::vector<double>>();
    if (doc.contains("convergence_check")) {
      config.convergence =
          convergence_check_from_string(doc["convergence_check"].get<std::string>());
    }
    if (doc.contains("negativity_threshold")) {
      config.negativity_threshold = doc["negativity_threshold"].get<double>();
    }
    if (doc.contains("gamma")) config.gamma = doc["gamma"].get<double>();
    if (doc.contains("csv")) config.csv_path = doc["csv"].get<std::string>();
    if (doc.contains("svg")) config.svg_path = doc["svg"].get<std::string>();
    if (doc.contains("cutoff")) {
      const auto& c = doc["cutoff"];
      CutoffPolicy& p = config.cutoff;
      p.floor = c.value("floor", p.floor);
      p.step = c.value("step", p.step);
      p.max_dim = c.value("max_dim", p.max_dim);
      p.tail_tolerance = c.value("tail_tolerance", p.tail_tolerance);
      p.leak_tolerance = c.value("leak_tolerance", p.leak_tolerance);
      p.convergence_tolerance = c.value("convergence_tolerance", p.convergence_tolerance);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("bad value in config " + path.string() + ": " + e.what());
  }
  validate(config);
  return config;
}

std::optional<double> safe_ratio(double numerator, double denominator) {
  if (!(std::abs(denominator) > kRatioDenominatorFloor)) return std::nullopt;
  return numerator / denominator;
}

namespace {

struct PointEvaluation {
  double n_r;
  double energy;
  int cutoff;
};

PointEvaluation evaluate_point(const StateSpec& spec, const ChannelParams& params, double t,
                               const SweepConfig& config, int start_dim) {
  CheckedEvolution ev = evolve_leak_checked(spec, params, t, config.cutoff, start_dim);
  return {negativity(ev.state, EigenPath::automatic, config.negativity_threshold).value,
          mean_total_photons(ev.state), ev.state.dim()};
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  validate(config);
  const StateSpec spec = parse_state_spec(config.state);
  const PnesCoefficients reference = build_coefficients(spec, reference_cutoff());
  const double e0 = pnes_energy(reference);
  const double n0 = pure_negativity(reference);

  std::vector<MatchKind> kinds;
  if (config.match_kind != MatchKind::entanglement) kinds.push_back(MatchKind::energy);
  if (config.match_kind != MatchKind::energy) kinds.push_back(MatchKind::entanglement);

  // The twin-beam reference is matched once, on the initial state.
  std::vector<std::optional<double>> squeezing;
  std::vector<std::string> match_errors;
  for (MatchKind kind : kinds) {
    const MatchTarget target =
        kind == MatchKind::energy
            ? MatchTarget{MeasureKind::energy, e0}
            : MatchTarget{config.entanglement_measure,
                          pure_measure(reference, config.entanglement_measure)};
    try {
      squeezing.push_back(std::atanh(solve_family_param(Family::twb, target, reference_cutoff())));
      match_errors.emplace_back();
    } catch (const Error& e) {
      squeezing.push_back(std::nullopt);
      match_errors.emplace_back(std::string("matching failed: ") + e.what());
    }
  }

  std::vector<SweepRecord> records;
  for (std::size_t i = 0; i < config.b_over_a.size(); ++i) {
    const ChannelParams params = ChannelParams::from_b_over_a(config.b_over_a[i], config.gamma);
    const bool check = config.convergence == ConvergenceCheck::all ||
                       (config.convergence == ConvergenceCheck::first && i == 0);
    for (std::size_t k = 0; k < kinds.size(); ++k) {
      SweepRecord rec;
      rec.b_over_a = config.b_over_a[i];
      rec.n_t = params.n_t();
      rec.match = kinds[k];
      rec.n_0 = n0;
      if (!squeezing[k]) {
        rec.error = match_errors[k];
        records.push_back(std::move(rec));
        continue;
      }
      try {
        rec.r_matched = *squeezing[k];
        rec.t_g = t_g_closed(rec.r_matched, params);
        rec.energy_at_tg = energy_closed_form(e0, params, rec.t_g);
        rec.n_g = reference_ng(rec.energy_at_tg);

        int start = 0;
        PointEvaluation point = evaluate_point(spec, params, rec.t_g, config, start);
        if (check) {
          while (true) {
            const PointEvaluation finer = evaluate_point(spec, params, rec.t_g, config,
                                                         point.cutoff + config.cutoff.step);
            const double delta =
                std::max(std::abs(finer.n_r - point.n_r), std::abs(finer.energy - point.energy));
            if (delta < config.cutoff.convergence_tolerance) {
              rec.conv_delta = delta;
              break;
            }
            if (finer.cutoff + config.cutoff.step > config.cutoff.max_dim) {
              throw ConvergenceError("cutoff convergence delta " + format_number(delta) +
                                     " above tolerance at D=" + std::to_string(finer.cutoff));
            }
            point = finer;
          }
        }
        rec.n_r = point.n_r;
        rec.cutoff = point.cutoff;
        rec.ratio_r0 = safe_ratio(rec.n_r, rec.n_0);
        rec.ratio_rg = safe_ratio(rec.n_r, rec.n_g);
      } catch (const CutoffError& e) {
        rec.error = e.what();
        rec.policy_failure = true;
      } catch (const ConvergenceError& e) {
        rec.error = e.what();
        rec.policy_failure = true;
      } catch (const Error& e) {
        rec.error = e.what();
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<Fig1Series> fig1_series() {
  return {
      {"pssv", "pssv eps0=0.1 E0=0.013", "pssv:mode_energy=0.013"},
      {"pssv", "pssv eps0=1.0 E0=0.3", "pssv:mode_energy=0.3"},
      {"psi01", "psi01 c1sq=0.5", "psi01:c1sq=0.5"},
      {"psi01", "psi01 c1sq=0.25", "psi01:c1sq=0.25"},
      {"psi01", "psi01 c1sq=0.05", "psi01:c1sq=0.05"},
  };
}

std::vector<Fig1SeriesResult> fig1_data(const Fig1Config& config) {
  std::vector<Fig1SeriesResult> out;
  for (const Fig1Series& series : fig1_series()) {
    SweepConfig sweep;
    sweep.state = series.state;
    sweep.match_kind = MatchKind::both;
    sweep.entanglement_measure = config.entanglement_measure;
    sweep.b_over_a = config.b_over_a;
    sweep.cutoff = config.cutoff;
    sweep.convergence = config.convergence;
    out.push_back({series, run_sweep(sweep)});
  }
  return out;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << content;
}

}  // namespace

Fig1Result fig1(const Fig1Config& config) {
  Fig1Result result;
  result.series = fig1_data(config);
  std::filesystem::create_directories(config.out_dir);
  for (std::string_view panel : {"pssv", "psi01"}) {
    for (MatchKind match : {MatchKind::energy, MatchKind::entanglement}) {
      const auto path = config.out_dir / ("fig1_" + std::string(panel) + "_" +
                                          std::string(to_string(match)) + ".csv");
      write_file(path, to_panel_csv(result.series, panel, match));
      result.files.push_back(path);
    }
  }
  if (config.write_svg) {
    const auto path = config.out_dir / "fig1.svg";
    write_file(path, render_fig1_svg(result.series));
    result.files.push_back(path);
  }
  return result;
}

}  // namespace pnes
