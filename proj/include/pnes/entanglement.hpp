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

#include <limits>
#include <utility>
#include <vector>

#include "pnes/channel.hpp"
#include "pnes/fock.hpp"
#include "pnes/states.hpp"

namespace pnes {

/// Eigenvalues above −threshold count as zero.
inline constexpr double kNegativityThreshold = 1e-9;

/// (ρ^{T₂})_{(n₁,n₂),(m₁,m₂)} = ρ_{(n₁,m₂),(m₁,n₂)}.
ComplexMatrix partial_transpose(const TwoModeState& rho);

struct NegativityResult {
  double value = 0.0;  ///< Σ|λ_i| over negative eigenvalues of ρ^{T₂}
  double min_eigenvalue = 0.0;
  bool block_path_used = false;
};

enum class EigenPath {
  /// Block-diagonalize by total photon number when the state allows it.
  automatic,
  /// Full Hermitian eigendecomposition of the D²×D² partial transpose.
  dense,
};

NegativityResult negativity(const TwoModeState& rho, EigenPath path = EigenPath::automatic,
                            double threshold = kNegativityThreshold);

struct SeparationOptions {
  double threshold = kNegativityThreshold;
  double t_start = 1.0;   ///< in units of 1/Γ
  double t_max = 100.0;   ///< in units of 1/Γ
  double time_tolerance = 1e-8;  ///< in units of 1/Γ
  double monotonicity_slack = 1e-10;
};

struct SeparationResult {
  double time = 0.0;  ///< +inf when still entangled at t_max
  double negativity_at_t_max = 0.0;
  /// (t, N(t)) for every time sampled during bracketing and bisection.
  std::vector<std::pair<double, double>> profile;
};

/// Earliest t with negativity(evolve(coeffs, t)) < threshold: geometric
/// bracket expansion from t_start, then bisection. Throws DiagnosticError if
/// the sampled negativity profile is not monotone.
SeparationResult separation_time(const PnesCoefficients& coeffs, const ChannelParams& params,
                                 FockCutoff cutoff, const SeparationOptions& options = {});

}  // namespace pnes
