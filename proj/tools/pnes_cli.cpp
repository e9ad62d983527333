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

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pnes/channel.hpp"
#include "pnes/entanglement.hpp"
#include "pnes/errors.hpp"
#include "pnes/gaussian.hpp"
#include "pnes/report.hpp"
#include "pnes/state_spec.hpp"
#include "pnes/states.hpp"
#include "pnes/sweep.hpp"
#include "pnes/thermal.hpp"

namespace {

using namespace pnes;

constexpr int kExitUsage = 1;
constexpr int kExitPolicy = 2;

void print(const std::string& key, double value) {
  std::cout << key << " = " << format_number(value) << "\n";
}

void print(const std::string& key, const std::string& value) {
  std::cout << key << " = " << value << "\n";
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      grid.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw InvalidInput("malformed grid value '" + token + "'");
    }
  }
  return grid;
}

struct StateQuantities {
  double energy, negativity, entropy;
};

StateQuantities quantities(const PnesCoefficients& c) {
  return {pnes_energy(c), pure_negativity(c), pure_entropy(c)};
}

int run_state(const std::string& text, std::optional<int> cutoff_dim, bool check) {
  const StateSpec spec = parse_state_spec(text);
  const int dim = cutoff_dim ? *cutoff_dim : initial_cutoff_dim(spec, CutoffPolicy{});
  const PnesCoefficients coeffs = build_coefficients(spec, FockCutoff(dim));
  print("family", std::string(to_string(spec.family)));
  if (spec.family != Family::custom) print("parameter", spec.parameter);
  print("cutoff", double(dim));
  std::cout << "coefficients =";
  for (std::size_t n = 0; n < coeffs.support(); ++n) {
    const Complex c = coeffs[n];
    std::cout << " " << format_number(c.real());
    if (c.imag() != 0.0) std::cout << (c.imag() < 0 ? "-" : "+") << format_number(std::abs(c.imag())) << "i";
  }
  std::cout << "\n";
  const StateQuantities q = quantities(coeffs);
  print("truncation_loss", coeffs.truncation_loss());
  print("energy", q.energy);
  print("mode_energy", q.energy / 2.0);
  print("negativity", q.negativity);
  print("entropy_nats", q.entropy);
  print("entropy_bits", q.entropy / std::log(2.0));
  if (check) {
    const StateQuantities finer = quantities(build_coefficients(spec, FockCutoff(dim + 4)));
    const double delta = std::max({std::abs(finer.energy - q.energy),
                                   std::abs(finer.negativity - q.negativity),
                                   std::abs(finer.entropy - q.entropy)});
    print("conv_delta", delta);
    if (!(delta < CutoffPolicy{}.convergence_tolerance)) return kExitPolicy;
  }
  return 0;
}

int run_match(const std::string& family_name, const std::string& kind, double value,
              std::optional<int> cutoff_dim) {
  Family family;
  if (family_name == "twb") family = Family::twb;
  else if (family_name == "pssv") family = Family::pssv;
  else if (family_name == "psi01") family = Family::psi01;
  else throw InvalidInput("unknown family '" + family_name + "'");
  const FockCutoff cutoff = cutoff_dim ? FockCutoff(*cutoff_dim) : reference_cutoff();
  const double parameter = solve_family_param(family, {measure_kind_from_string(kind), value}, cutoff);
  print("parameter", parameter);
  if (family == Family::twb) print("r", std::atanh(parameter));
  const StateQuantities q = quantities(family_coeffs(family, parameter, cutoff));
  print("energy", q.energy);
  print("negativity", q.negativity);
  print("entropy_nats", q.entropy);
  return 0;
}

struct EvolveReport {
  int cutoff;
  double energy, negativity;
};

EvolveReport evolve_once(const StateSpec& spec, const ChannelParams& params, double t,
                         std::optional<int> cutoff_dim, int start_dim, bool verbose) {
  std::optional<TwoModeState> state;
  if (cutoff_dim) {
    const FockCutoff cutoff(*cutoff_dim + start_dim);
    state.emplace(evolve_pnes(build_coefficients(spec, cutoff), params, t, cutoff));
  } else {
    state.emplace(evolve_leak_checked(spec, params, t, CutoffPolicy{}, start_dim).state);
  }
  const NegativityResult neg = negativity(*state);
  if (verbose) {
    const SanityReport report = sanity_check(*state);
    print("cutoff", double(state->dim()));
    print("trace_deviation", report.trace_deviation);
    print("hermiticity_deviation", report.hermiticity_deviation);
    print("min_eigenvalue", report.min_eigenvalue);
    print("tail_bound", report.tail_bound);
    print("sanity", report.ok() ? std::string("ok") : std::string("violated"));
    print("energy", mean_total_photons(*state));
    print("negativity", neg.value);
    print("pt_min_eigenvalue", neg.min_eigenvalue);
  }
  return {state->dim(), mean_total_photons(*state), neg.value};
}

int run_evolve(const std::string& text, double n_t, double gamma, double t,
               std::optional<int> cutoff_dim, bool check) {
  const StateSpec spec = parse_state_spec(text);
  const ChannelParams params = ChannelParams::thermal(n_t, gamma);
  const EvolveReport base = evolve_once(spec, params, t, cutoff_dim, 0, true);
  const double e0 = pnes_energy(build_coefficients(spec, reference_cutoff()));
  print("energy_closed_form", energy_closed_form(e0, params, t));
  if (check) {
    const EvolveReport finer = cutoff_dim ? evolve_once(spec, params, t, cutoff_dim, 4, false)
                                          : evolve_once(spec, params, t, std::nullopt,
                                                        base.cutoff + 4, false);
    const double delta =
        std::max(std::abs(finer.energy - base.energy), std::abs(finer.negativity - base.negativity));
    print("conv_delta", delta);
    if (!(delta < CutoffPolicy{}.convergence_tolerance)) return kExitPolicy;
  }
  return 0;
}

int run_tg(std::optional<double> r, const std::string& state_text, const std::string& match,
           const std::string& measure, double n_t, double gamma, bool separation, bool check) {
  const ChannelParams params = ChannelParams::thermal(n_t, gamma);
  if (r) {
    print("t_g", t_g_closed(*r, params));
    return 0;
  }
  if (state_text.empty()) throw InvalidInput("tg needs --r or --state");
  const StateSpec spec = parse_state_spec(state_text);
  const PnesCoefficients reference = build_coefficients(spec, reference_cutoff());
  const MatchKind kind = match_kind_from_string(match);
  if (kind == MatchKind::both) throw InvalidInput("tg --match must be energy or entanglement");
  const MeasureKind measure_kind =
      kind == MatchKind::energy ? MeasureKind::energy : measure_kind_from_string(measure);
  const double lambda = solve_family_param(
      Family::twb, {measure_kind, pure_measure(reference, measure_kind)}, reference_cutoff());
  const double r_matched = std::atanh(lambda);
  print("r_matched", r_matched);
  print("t_g", t_g_closed(r_matched, params));
  if (separation) {
    const FockCutoff cutoff = horizon_cutoff(spec, params, INFINITY);
    const SeparationResult sep =
        separation_time(build_coefficients(spec, cutoff), params, cutoff);
    print("cutoff", double(cutoff.dim()));
    print("t_separation", sep.time);
    if (check) {
      const FockCutoff finer(cutoff.dim() + 4);
      const SeparationResult sep2 = separation_time(build_coefficients(spec, finer), params, finer);
      const double delta = std::abs(sep2.time - sep.time);
      print("conv_delta", delta);
      if (!(delta < CutoffPolicy{}.convergence_tolerance)) return kExitPolicy;
    }
  }
  return 0;
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << content;
}

int run_sweep_cmd(SweepConfig config) {
  const std::vector<SweepRecord> records = run_sweep(config);
  const std::string csv = to_csv(records);
  if (config.csv_path.empty()) {
    std::cout << csv;
  } else {
    write_text(config.csv_path, csv);
  }
  if (!config.svg_path.empty()) {
    const std::vector<Fig1SeriesResult> series = {
        {{config.state, config.state, config.state}, records}};
    write_text(config.svg_path, render_fig1_svg(series));
  }
  for (const SweepRecord& r : records) {
    if (r.policy_failure) return kExitPolicy;
  }
  return 0;
}

int run_fig1(const Fig1Config& config) {
  const Fig1Result result = fig1(config);
  for (const auto& path : result.files) std::cout << path.string() << "\n";
  for (const auto& s : result.series) {
    for (const auto& r : s.records) {
      if (r.policy_failure) return kExitPolicy;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Photon-number entangled states in a thermal channel"};
  app.require_subcommand(1);
  app.fallthrough();
  bool check = false;
  app.add_flag("--check", check, "Recompute at a larger Fock cutoff and report the change");

  std::optional<int> cutoff_dim;
  auto add_cutoff = [&](CLI::App* cmd) {
    cmd->add_option("--cutoff", cutoff_dim, "Fock levels per mode (default: cutoff policy)")
        ->check(CLI::Range(2, 512));
  };

  std::string state_text;
  auto* state_cmd = app.add_subcommand("state", "Inspect a state");
  state_cmd->add_option("spec", state_text, "e.g. twb:lambda=0.5, pssv:energy=0.013")->required();
  add_cutoff(state_cmd);

  std::string family, kind = "energy";
  double value = 0.0;
  auto* match_cmd = app.add_subcommand("match", "Solve a family parameter for a target measure");
  match_cmd->add_option("--family", family, "twb | pssv | psi01")->required();
  match_cmd->add_option("--kind", kind, "energy | negativity | entropy");
  match_cmd->add_option("--value", value, "Target value")->required();
  add_cutoff(match_cmd);

  double n_t = 0.0, gamma = 1.0, t = 0.0;
  auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a state through the channel");
  evolve_cmd->add_option("spec", state_text, "State string")->required();
  evolve_cmd->add_option("--nt", n_t, "Thermal occupation N_T")->required();
  evolve_cmd->add_option("--t", t, "Time in units of 1/gamma")->required();
  evolve_cmd->add_option("--gamma", gamma, "Damping rate");
  add_cutoff(evolve_cmd);

  std::optional<double> r;
  std::string match = "energy", measure = "entropy";
  bool separation = false;
  auto* tg_cmd = app.add_subcommand("tg", "Gaussian separation time");
  tg_cmd->add_option("--r", r, "Twin-beam squeezing");
  tg_cmd->add_option("--state", state_text, "State string to match a twin beam to");
  tg_cmd->add_option("--match", match, "energy | entanglement");
  tg_cmd->add_option("--measure", measure, "Entanglement measure: entropy | negativity");
  tg_cmd->add_option("--nt", n_t, "Thermal occupation N_T")->required();
  tg_cmd->add_option("--gamma", gamma, "Damping rate");
  tg_cmd->add_flag("--separation", separation, "Also compute the state's own separation time");

  std::string config_path, grid_text, out_path, svg_path, conv_text;
  std::optional<std::string> sweep_state, sweep_match, sweep_measure;
  auto* sweep_cmd = app.add_subcommand("sweep", "Residual negativity over a B/A grid (CSV)");
  sweep_cmd->add_option("--config", config_path, "JSON config file");
  sweep_cmd->add_option("--state", sweep_state, "State string");
  sweep_cmd->add_option("--match", sweep_match, "energy | entanglement | both");
  sweep_cmd->add_option("--measure", sweep_measure, "Entanglement measure for matching");
  sweep_cmd->add_option("--grid", grid_text, "Comma-separated B/A values");
  sweep_cmd->add_option("--convergence", conv_text, "none | first | all");
  sweep_cmd->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep_cmd->add_option("--svg", svg_path, "Optional SVG output path");

  std::string fig_out = "results";
  bool no_svg = false;
  auto* fig_cmd = app.add_subcommand("fig1", "Residual-negativity ratios for the reference states");
  fig_cmd->add_option("--out", fig_out, "Output directory");
  fig_cmd->add_option("--grid", grid_text, "Comma-separated B/A values");
  fig_cmd->add_option("--measure", measure, "Entanglement measure for matching");
  fig_cmd->add_option("--convergence", conv_text, "none | first | all");
  fig_cmd->add_flag("--no-svg", no_svg, "Skip the SVG");

  auto* thermal_cmd = app.add_subcommand("thermal", "Bose-Einstein occupation of an optical mode");
  double frequency = 1e15, temperature = 0.0;
  thermal_cmd->add_option("--freq", frequency, "Frequency in Hz");
  thermal_cmd->add_option("--temp", temperature, "Temperature in K")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*state_cmd) return run_state(state_text, cutoff_dim, check);
    if (*match_cmd) return run_match(family, kind, value, cutoff_dim);
    if (*evolve_cmd) return run_evolve(state_text, n_t, gamma, t, cutoff_dim, check);
    if (*tg_cmd) return run_tg(r, state_text, match, measure, n_t, gamma, separation, check);
    if (*thermal_cmd) {
      print("n_t", thermal_occupation(frequency, temperature));
      return 0;
    }
    if (*sweep_cmd) {
      SweepConfig config = config_path.empty() ? SweepConfig{} : load_sweep_config(config_path);
      if (sweep_state) config.state = *sweep_state;
      if (sweep_match) config.match_kind = match_kind_from_string(*sweep_match);
      if (sweep_measure) config.entanglement_measure = measure_kind_from_string(*sweep_measure);
      if (!grid_text.empty()) config.b_over_a = parse_grid(grid_text);
      if (!conv_text.empty()) config.convergence = convergence_check_from_string(conv_text);
      else if (check) config.convergence = ConvergenceCheck::all;
      if (!out_path.empty()) config.csv_path = out_path;
      if (!svg_path.empty()) config.svg_path = svg_path;
      validate(config);
      return run_sweep_cmd(config);
    }
    if (*fig_cmd) {
      Fig1Config config;
      config.out_dir = fig_out;
      config.write_svg = !no_svg;
      config.entanglement_measure = measure_kind_from_string(measure);
      if (!grid_text.empty()) config.b_over_a = parse_grid(grid_text);
      if (!conv_text.empty()) config.convergence = convergence_check_from_string(conv_text);
      SweepConfig probe;
      probe.b_over_a = config.b_over_a;
      validate(probe);
      return run_fig1(config);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "numerical policy failure: " << e.what() << "\n";
    return kExitPolicy;
  }
  return kExitUsage;
}
