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

#include <vector>

#include <Eigen/Dense>

#include "pnes/fock.hpp"
#include "pnes/state_spec.hpp"
#include "pnes/states.hpp"

namespace pnes {

/// Thermal/lossy channel acting independently on each mode:
///   dρ/dt = A Σ_j L[a_j]ρ + B Σ_j L[a_j†]ρ,  L[O]ρ = 2OρO† − O†Oρ − ρO†O,
/// with A = Γ(1+N_T)/2 and B = ΓN_T/2.
class ChannelParams {
 public:
  static ChannelParams thermal(double n_t, double gamma = 1.0);
  /// N_T = r / (1 - r) for r = B/A in [0, 1).
  static ChannelParams from_b_over_a(double b_over_a, double gamma = 1.0);

  double gamma() const noexcept { return gamma_; }
  double n_t() const noexcept { return n_t_; }
  double a_rate() const noexcept { return 0.5 * gamma_ * (1.0 + n_t_); }
  double b_rate() const noexcept { return 0.5 * gamma_ * n_t_; }
  double b_over_a() const noexcept { return n_t_ / (1.0 + n_t_); }

 private:
  ChannelParams(double n_t, double gamma) : gamma_(gamma), n_t_(n_t) {}
  double gamma_;
  double n_t_;
};

/// Generator for the single-mode elements ρ_{n,n+d} (d ≥ 0; d < 0 is the
/// transpose by Hermiticity and shares the matrix). Row/column n runs over
/// 0..D-1-|d|. The top row has no inflow from level D (absorbing truncation).
struct SectorGenerator {
  int sector;
  Eigen::MatrixXd matrix;
};

SectorGenerator liouvillian_sector(const ChannelParams& params, int sector, FockCutoff cutoff);

enum class PropagatorMethod { pade, adaptive_ode };

/// Single-mode channel Φ_t on Fock matrix units. Φ_t(|n⟩⟨m|) is supported on
/// the sector m'−n' = m−n; with lo = min(n, m) it equals
///   Σ_k P_{|m−n|}(k, lo) |k + n − lo⟩⟨k + m − lo|,
/// where P_d = exp(t L_d) is the sector propagator.
class TransferTensor {
 public:
  TransferTensor(double time, FockCutoff cutoff, std::vector<Eigen::MatrixXd> sector_propagators);

  double time() const noexcept { return time_; }
  FockCutoff cutoff() const noexcept { return cutoff_; }
  int dim() const noexcept { return cutoff_.dim(); }

  /// P_d for d = 0..D-1, size (D-d)x(D-d).
  const Eigen::MatrixXd& sector_propagator(int sector) const;

  /// Dense D×D image M^{nm} = Φ_t(|n⟩⟨m|).
  Eigen::MatrixXd image(int n, int m) const;

 private:
  double time_;
  FockCutoff cutoff_;
  std::vector<Eigen::MatrixXd> sectors_;
};

TransferTensor propagator(const ChannelParams& params, double t, FockCutoff cutoff,
                          PropagatorMethod method = PropagatorMethod::pade);

/// Largest initial truncation loss evolve_pnes accepts by default.
inline constexpr double kInitialTailTolerance = 1e-12;

/// ρ(t) = (Φ_t ⊗ Φ_t) |Ψ⟩⟨Ψ|, accumulated sector by sector.
TwoModeState evolve_pnes(const PnesCoefficients& coeffs, const TransferTensor& tensor,
                         double max_initial_tail = kInitialTailTolerance);
TwoModeState evolve_pnes(const PnesCoefficients& coeffs, const ChannelParams& params, double t,
                         FockCutoff cutoff, double max_initial_tail = kInitialTailTolerance);

/// (Φ_t ⊗ Φ_t) applied to an arbitrary two-mode state of the same cutoff.
TwoModeState evolve_state(const TwoModeState& rho, const TransferTensor& tensor);

/// E(t) = e^{−Γt} E0 + (1 − e^{−Γt}) 2N_T for the total photon number.
double energy_closed_form(double e0, const ChannelParams& params, double t);

/// Per-mode mean occupation n̄(t) = e^{−Γt} n̄0 + (1 − e^{−Γt}) N_T.
double mode_occupation(double n0, const ChannelParams& params, double t);

struct CutoffPolicy {
  double tail_tolerance = 1e-12;
  int floor = 12;
  int step = 4;
  int max_dim = 64;
  double leak_tolerance = 1e-10;
  double convergence_tolerance = 1e-8;
};

/// Smallest D with thermal tail (n̄/(1+n̄))^D below `tail_tolerance`.
int thermal_cutoff_dim(double occupation, double tail_tolerance);

/// max(floor, initial-state tail cutoff).
int initial_cutoff_dim(const StateSpec& spec, const CutoffPolicy& policy);

/// Conservative cutoff for evolutions up to `horizon` (may be +inf): the
/// initial-state tail and a thermal tail at the largest per-mode occupation
/// reached on [0, horizon] must both be below the policy tolerance.
FockCutoff horizon_cutoff(const StateSpec& spec, const ChannelParams& params, double horizon,
                          const CutoffPolicy& policy = {});

struct CheckedEvolution {
  TwoModeState state;
  double leak;  ///< 1 - tr ρ(t), the weight lost through the truncation row
};

/// Evolves from D = max(start_dim, initial_cutoff_dim) and raises D by
/// policy.step until the truncation leak is below policy.leak_tolerance.
CheckedEvolution evolve_leak_checked(const StateSpec& spec, const ChannelParams& params, double t,
                                     const CutoffPolicy& policy = {}, int start_dim = 0);

}  // namespace pnes
