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

#include <span>
#include <string_view>
#include <vector>

#include "pnes/fock.hpp"

namespace pnes {

enum class Family { twb, pssv, psi01, custom };

std::string_view to_string(Family family);

/// Schmidt coefficients Ψ_n of a pure photon-number entangled state
/// Σ_n Ψ_n |n⟩|n⟩, normalized over the stored levels.
class PnesCoefficients {
 public:
  /// Normalizes `coeffs`; `truncation_loss` is the weight the untruncated
  /// family would have placed beyond the stored levels.
  PnesCoefficients(std::vector<Complex> coeffs, Family family, double parameter,
                   double truncation_loss = 0.0);

  std::span<const Complex> coefficients() const noexcept { return coeffs_; }
  Complex operator[](std::size_t n) const { return coeffs_.at(n); }
  std::size_t size() const noexcept { return coeffs_.size(); }
  /// One past the highest level with a nonzero coefficient.
  std::size_t support() const noexcept;

  Family family() const noexcept { return family_; }
  /// λ for twb, x for pssv, |c1|² for psi01, NaN for custom.
  double parameter() const noexcept { return parameter_; }
  double truncation_loss() const noexcept { return truncation_loss_; }

 private:
  std::vector<Complex> coeffs_;
  Family family_;
  double parameter_;
  double truncation_loss_;
};

/// Two-mode squeezed vacuum, Ψ_n ∝ λⁿ.
PnesCoefficients twb_coeffs(double lambda, FockCutoff cutoff);
/// Photon-subtracted squeezed vacuum, Ψ_n ∝ (n+1) x^{n+1}.
PnesCoefficients pssv_coeffs(double x, FockCutoff cutoff);
/// √(1-c1²)|00⟩ + √c1² |11⟩.
PnesCoefficients psi01_coeffs(double c1_sq);
/// Arbitrary coefficients, normalized on construction.
PnesCoefficients custom_coeffs(std::vector<Complex> coeffs);

/// Closed-form PSSV normalization (1-y)³/(y(1+y)), y = x².
double pssv_normalization(double x);

/// Builds a family member from its parameter; not valid for Family::custom.
PnesCoefficients family_coeffs(Family family, double parameter, FockCutoff cutoff);

/// Total mean photon number 2 Σ n |Ψ_n|².
double pnes_energy(const PnesCoefficients& coeffs);
/// ((Σ|Ψ_n|)² - 1) / 2.
double pure_negativity(const PnesCoefficients& coeffs);
/// Entanglement entropy in nats.
double pure_entropy(const PnesCoefficients& coeffs);

/// Projector |Ψ⟩⟨Ψ| on the two-mode space.
TwoModeState pnes_density(const PnesCoefficients& coeffs, FockCutoff cutoff);

enum class MeasureKind { energy, negativity, entropy };

std::string_view to_string(MeasureKind kind);
MeasureKind measure_kind_from_string(std::string_view name);

struct MatchTarget {
  MeasureKind kind;
  double value;
};

double pure_measure(const PnesCoefficients& coeffs, MeasureKind kind);

/// Bisection on the family parameter so that the chosen measure equals
/// target.value within 1e-10. Brackets: [0, 1-1e-9] for λ and x,
/// [0, 1] for c1² when matching energy and [0, 1/2] otherwise.
double solve_family_param(Family family, MatchTarget target, FockCutoff cutoff);

}  // namespace pnes
