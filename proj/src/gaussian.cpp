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

#include "pnes/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pnes/errors.hpp"

namespace pnes {

namespace {

constexpr double kSymplecticSlack = 1e-12;

struct Invariants {
  double det_a, det_b, det_c, det_sigma;
};

Invariants invariants(const CovarianceMatrix& cm) {
  return {cm.block<2, 2>(0, 0).determinant(), cm.block<2, 2>(2, 2).determinant(),
          cm.block<2, 2>(0, 2).determinant(), cm.determinant()};
}

double symplectic_root(double delta, double det_sigma, double sign) {
  const double disc = std::max(0.0, delta * delta - 4.0 * det_sigma);
  return std::sqrt(std::max(0.0, (delta + sign * std::sqrt(disc)) / 2.0));
}

}  // namespace

CovarianceMatrix SymmetricStdForm::matrix() const {
  CovarianceMatrix cm = CovarianceMatrix::Zero();
  cm(0, 0) = cm(1, 1) = cm(2, 2) = cm(3, 3) = a;
  cm(0, 2) = cm(2, 0) = c;
  cm(1, 3) = cm(3, 1) = -c;
  return cm;
}

SymmetricStdForm to_symmetric_std_form(const CovarianceMatrix& cm, double tol) {
  const SymmetricStdForm form{0.25 * (cm(0, 0) + cm(1, 1) + cm(2, 2) + cm(3, 3)),
                              0.25 * (cm(0, 2) + cm(2, 0) - cm(1, 3) - cm(3, 1))};
  const double deviation = (cm - form.matrix()).cwiseAbs().maxCoeff();
  if (deviation > tol) {
    throw DiagnosticError("covariance matrix deviates from symmetric standard form by " +
                          std::to_string(deviation));
  }
  return form;
}

SymmetricStdForm twb_cm(double r) {
  if (r < 0.0) throw InvalidInput("squeezing r must be non-negative");
  return {std::cosh(2.0 * r) / 2.0, std::sinh(2.0 * r) / 2.0};
}

SymmetricStdForm evolve_cm(const SymmetricStdForm& form, const ChannelParams& params, double t) {
  if (t < 0.0) throw InvalidInput("evolution time must be non-negative");
  const double decay = std::exp(-params.gamma() * t);
  return {decay * form.a + (1.0 - decay) * (params.n_t() + 0.5), decay * form.c};
}

double nu_tilde_minus(const SymmetricStdForm& form) { return form.a - std::abs(form.c); }

double nu_tilde_minus(const CovarianceMatrix& cm) {
  const Invariants inv = invariants(cm);
  return symplectic_root(inv.det_a + inv.det_b - 2.0 * inv.det_c, inv.det_sigma, -1.0);
}

double nu_tilde_plus(const CovarianceMatrix& cm) {
  const Invariants inv = invariants(cm);
  return symplectic_root(inv.det_a + inv.det_b - 2.0 * inv.det_c, inv.det_sigma, +1.0);
}

double nu_minus(const CovarianceMatrix& cm) {
  const Invariants inv = invariants(cm);
  return symplectic_root(inv.det_a + inv.det_b + 2.0 * inv.det_c, inv.det_sigma, -1.0);
}

bool simon_separable(const SymmetricStdForm& form) { return nu_tilde_minus(form) >= 0.5; }

double t_g_closed(double r, const ChannelParams& params) {
  if (r <= 0.0) return 0.0;
  if (params.n_t() == 0.0) return std::numeric_limits<double>::infinity();
  return std::log1p(-std::expm1(-2.0 * r) / (2.0 * params.n_t())) / params.gamma();
}

namespace {

double negativity_from_nu(double nu_minus_pt, double nu_plus_pt) {
  if (nu_plus_pt < 0.5 - kSymplecticSlack) {
    throw DiagnosticError("larger partially transposed symplectic eigenvalue " +
                          std::to_string(nu_plus_pt) + " is below 1/2");
  }
  return std::max(0.0, (1.0 / (2.0 * nu_minus_pt) - 1.0) / 2.0);
}

}  // namespace

double gaussian_negativity(const SymmetricStdForm& form) {
  return negativity_from_nu(nu_tilde_minus(form), form.a + std::abs(form.c));
}

double gaussian_negativity(const CovarianceMatrix& cm) {
  return negativity_from_nu(nu_tilde_minus(cm), nu_tilde_plus(cm));
}

double twb_squeezing_for_energy(double energy) {
  if (energy < 0.0) throw InvalidInput("energy must be non-negative");
  return std::asinh(std::sqrt(energy / 2.0));
}

double reference_ng(double energy) {
  const double lambda = std::tanh(twb_squeezing_for_energy(energy));
  return lambda / (1.0 - lambda);
}

namespace {

// Single-mode ladder operators truncated to the cutoff.
Eigen::MatrixXd lowering(int d) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

// tr(ρ (O1 ⊗ O2)) = Σ ρ_{ij} (O1 ⊗ O2)_{ji}.
Complex expect(const TwoModeState& rho, const Eigen::MatrixXd& op1, const Eigen::MatrixXd& op2) {
  const int d = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  Complex sum = 0.0;
  for (int i1 = 0; i1 < d; ++i1) {
    for (int j1 = 0; j1 < d; ++j1) {
      const double o1 = op1(j1, i1);
      if (o1 == 0.0) continue;
      for (int i2 = 0; i2 < d; ++i2) {
        for (int j2 = 0; j2 < d; ++j2) {
          const double o2 = op2(j2, i2);
          if (o2 == 0.0) continue;
          sum += m(Index(i1) * d + i2, Index(j1) * d + j2) * (o1 * o2);
        }
      }
    }
  }
  return sum;
}

}  // namespace

CovarianceMatrix cm_from_fock(const TwoModeState& rho, double first_moment_tol) {
  const int d = rho.dim();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  const Eigen::MatrixXd a = lowering(d);
  const Eigen::MatrixXd ad = a.transpose();
  const Eigen::MatrixXd num = ad * a;
  const Eigen::MatrixXd a2 = a * a;

  const Complex mean1 = expect(rho, a, id);
  const Complex mean2 = expect(rho, id, a);
  if (std::abs(mean1) > first_moment_tol || std::abs(mean2) > first_moment_tol) {
    throw DiagnosticError("first moments (" + std::to_string(std::abs(mean1)) + ", " +
                          std::to_string(std::abs(mean2)) + ") do not vanish");
  }
  const double x_mean[2] = {std::sqrt(2.0) * mean1.real(), std::sqrt(2.0) * mean2.real()};
  const double p_mean[2] = {std::sqrt(2.0) * mean1.imag(), std::sqrt(2.0) * mean2.imag()};
  const Complex sq[2] = {expect(rho, a2, id), expect(rho, id, a2)};
  const double occ[2] = {expect(rho, num, id).real(), expect(rho, id, num).real()};
  const Complex ab = expect(rho, a, a);     // ⟨a1 a2⟩
  const Complex adb = expect(rho, ad, a);   // ⟨a1† a2⟩

  CovarianceMatrix cm;
  for (int j = 0; j < 2; ++j) {
    const int x = 2 * j, p = 2 * j + 1;
    cm(x, x) = sq[j].real() + occ[j] + 0.5 - x_mean[j] * x_mean[j];
    cm(p, p) = -sq[j].real() + occ[j] + 0.5 - p_mean[j] * p_mean[j];
    cm(x, p) = cm(p, x) = sq[j].imag() - x_mean[j] * p_mean[j];
  }
  cm(0, 2) = cm(2, 0) = ab.real() + adb.real() - x_mean[0] * x_mean[1];
  cm(1, 3) = cm(3, 1) = adb.real() - ab.real() - p_mean[0] * p_mean[1];
  cm(0, 3) = cm(3, 0) = ab.imag() + adb.imag() - x_mean[0] * p_mean[1];
  cm(1, 2) = cm(2, 1) = ab.imag() - adb.imag() - p_mean[0] * x_mean[1];
  return cm;
}

}  // namespace pnes
