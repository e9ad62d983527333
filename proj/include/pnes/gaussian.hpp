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

#include <Eigen/Dense>

#include "pnes/channel.hpp"
#include "pnes/fock.hpp"

namespace pnes {

/// 4×4 quadrature covariance matrix, ordering (x₁, p₁, x₂, p₂), vacuum = I/2.
using CovarianceMatrix = Eigen::Matrix4d;

/// Symmetric standard form: diagonal blocks a·I₂, off-diagonal c·diag(1, −1).
struct SymmetricStdForm {
  double a = 0.5;
  double c = 0.0;

  CovarianceMatrix matrix() const;
};

/// Extracts (a, c) from a covariance matrix already in symmetric standard form.
/// Throws DiagnosticError if the matrix deviates from that form by more than `tol`.
SymmetricStdForm to_symmetric_std_form(const CovarianceMatrix& cm, double tol = 1e-12);

/// Twin beam with squeezing r: a = cosh(2r)/2, c = sinh(2r)/2.
SymmetricStdForm twb_cm(double r);

/// a(t) = e^{−Γt} a + (1 − e^{−Γt})(N_T + ½), c(t) = e^{−Γt} c.
SymmetricStdForm evolve_cm(const SymmetricStdForm& form, const ChannelParams& params, double t);

/// Smallest symplectic eigenvalue of the partially transposed state, a − |c|.
double nu_tilde_minus(const SymmetricStdForm& form);
/// General two-mode route via Δ̃ = det A + det B − 2 det C.
double nu_tilde_minus(const CovarianceMatrix& cm);
double nu_tilde_plus(const CovarianceMatrix& cm);

/// Smallest symplectic eigenvalue of σ itself; physical states have ν₋ ≥ ½.
double nu_minus(const CovarianceMatrix& cm);

/// PPT criterion, exact for two-mode Gaussian states: separable iff ν̃₋ ≥ ½.
bool simon_separable(const SymmetricStdForm& form);

/// Time at which an evolving twin beam of squeezing r becomes separable:
/// ln(1 + (1 − e^{−2r}) / (2N_T)) / Γ; +inf for N_T = 0 and 0 for r ≤ 0.
double t_g_closed(double r, const ChannelParams& params);

/// max(0, (1/(2ν̃₋) − 1)/2). Throws DiagnosticError when ν̃₊ < ½.
double gaussian_negativity(const SymmetricStdForm& form);
double gaussian_negativity(const CovarianceMatrix& cm);

/// Negativity of the pure twin beam with total energy E (sinh²r = E/2).
double reference_ng(double energy);

/// Squeezing of the twin beam with total energy E.
double twb_squeezing_for_energy(double energy);

/// Second moments of x_j = (a_j + a_j†)/√2, p_j = (a_j − a_j†)/(i√2) from a Fock
/// state. Throws DiagnosticError when first moments exceed `first_moment_tol`.
CovarianceMatrix cm_from_fock(const TwoModeState& rho, double first_moment_tol = 1e-10);

}  // namespace pnes
