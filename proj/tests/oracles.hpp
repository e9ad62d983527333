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

// Independent reference computations for the test suites. Nothing here calls
// into the code paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/Eigenvalues>

namespace pnes::oracle {

using CMat = Eigen::MatrixXcd;

/// Brute-force Σ_{n≥0} (n+1)² y^{n+1} for the PSSV normalization.
inline double pssv_series(double x) {
  const double y = x * x;
  double sum = 0.0, ypow = y;
  for (int n = 0; n < 100000; ++n) {
    const double term = double(n + 1) * double(n + 1) * ypow;
    sum += term;
    if (term < 1e-20 * sum) break;
    ypow *= y;
  }
  return sum;
}

/// Thermal populations N^k / (1+N)^{k+1}.
inline std::vector<double> thermal_populations(double n_t, int levels) {
  std::vector<double> p(levels);
  for (int k = 0; k < levels; ++k) p[k] = std::pow(n_t, k) / std::pow(1.0 + n_t, k + 1);
  return p;
}

/// Two-mode projector |Ψ⟩⟨Ψ| built from explicit kets.
inline CMat pnes_projector(const std::vector<std::complex<double>>& coeffs, int dim) {
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(dim * dim);
  for (std::size_t n = 0; n < coeffs.size(); ++n) ket(n * dim + n) = coeffs[n];
  return ket * ket.adjoint();
}

/// Partial transpose on the second mode by explicit reshuffling through a
/// 4-index view.
inline CMat partial_transpose(const CMat& rho, int dim) {
  CMat out(rho.rows(), rho.cols());
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d) out(a * dim + d, c * dim + b) = rho(a * dim + b, c * dim + d);
  return out;
}

/// Σ|negative eigenvalues| of the dense partial transpose.
inline double dense_negativity(const CMat& rho, int dim) {
  const CMat pt = partial_transpose(rho, dim);
  Eigen::SelfAdjointEigenSolver<CMat> solver(pt, Eigen::EigenvaluesOnly);
  double sum = 0.0;
  for (double e : solver.eigenvalues())
    if (e < -1e-9) sum -= e;
  return sum;
}

/// Right-hand side of the two-mode master equation, built from ladder-operator
/// matrices. The B-term anticommutator uses the exact a a† = n + 1 so that the
/// truncated top level leaks population the same way the sector generator does.
class TwoModeLiouvillian {
 public:
  TwoModeLiouvillian(double a_rate, double b_rate, int dim) : a_rate_(a_rate), b_rate_(b_rate) {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::MatrixXd low = Eigen::MatrixXd::Zero(dim, dim);
    Eigen::MatrixXd num = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) low(n - 1, n) = std::sqrt(double(n));
    for (int n = 0; n < dim; ++n) num(n, n) = n;
    const Eigen::MatrixXd num_plus_one = num + id;
    lower_ = {sparse(kron(low, id)), sparse(kron(id, low))};
    raise_ = {SMat(lower_[0].adjoint()), SMat(lower_[1].adjoint())};
    number_ = {sparse(kron(num, id)), sparse(kron(id, num))};
    number_plus_ = {sparse(kron(num_plus_one, id)), sparse(kron(id, num_plus_one))};
  }

  CMat operator()(const CMat& rho) const {
    CMat out = CMat::Zero(rho.rows(), rho.cols());
    for (int j = 0; j < 2; ++j) {
      const SMat& a = lower_[j];
      const SMat& ad = raise_[j];
      const SMat& n = number_[j];
      const SMat& np = number_plus_[j];
      const CMat a_rho = a * rho;
      const CMat ad_rho = ad * rho;
      out += a_rate_ * (2.0 * (a * a_rho.adjoint()).adjoint() - n * rho - (n * rho.adjoint()).adjoint());
      out += b_rate_ * (2.0 * (ad * ad_rho.adjoint()).adjoint() - np * rho - (np * rho.adjoint()).adjoint());
    }
    return out;
  }

 private:
  using SMat = Eigen::SparseMatrix<std::complex<double>>;

  static Eigen::MatrixXd kron(const Eigen::MatrixXd& x, const Eigen::MatrixXd& y) {
    Eigen::MatrixXd out(x.rows() * y.rows(), x.cols() * y.cols());
    for (int i = 0; i < x.rows(); ++i)
      for (int j = 0; j < x.cols(); ++j) out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
  }

  static SMat sparse(const Eigen::MatrixXd& m) {
    return m.cast<std::complex<double>>().sparseView();
  }

  double a_rate_, b_rate_;
  std::vector<SMat> lower_, raise_, number_, number_plus_;
};

/// Fixed-step classical RK4 on the full D²×D² density matrix.
inline CMat rk4_evolve(const TwoModeLiouvillian& rhs, CMat rho, double t, int steps) {
  const double h = t / steps;
  for (int s = 0; s < steps; ++s) {
    const CMat k1 = rhs(rho);
    const CMat k2 = rhs(rho + 0.5 * h * k1);
    const CMat k3 = rhs(rho + 0.5 * h * k2);
    const CMat k4 = rhs(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return rho;
}

/// Bisection for the root of f on [lo, hi] where f(lo) < 0 < f(hi) or the reverse.
inline double bisect(const std::function<double(double)>& f, double lo, double hi, int iters = 200) {
  double flo = f(lo);
  for (int i = 0; i < iters; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Symplectic eigenvalues of a 4×4 covariance matrix as |eig(iΩσ)|, sorted ascending.
inline std::vector<double> symplectic_spectrum(const Eigen::Matrix4d& sigma) {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = omega(2, 3) = 1.0;
  omega(1, 0) = omega(3, 2) = -1.0;
  const Eigen::Matrix4cd m = std::complex<double>(0.0, 1.0) * (omega * sigma).cast<std::complex<double>>();
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(m);
  std::vector<double> nu;
  for (int i = 0; i < 4; ++i) nu.push_back(std::abs(solver.eigenvalues()(i)));
  std::sort(nu.begin(), nu.end());
  return {nu[0], nu[2]};
}

/// Twin-beam covariance matrix built from ⟨x_i x_j⟩ of e^{r(a†b† − ab)}|00⟩,
/// evolved by σ(t) = e^{−Γt}σ + (1 − e^{−Γt})(N_T + ½)I, then partially
/// transposed (p₂ → −p₂).
inline Eigen::Matrix4d evolved_twb_pt_cm(double r, double n_t, double gamma, double t) {
  const double ch = std::cosh(2.0 * r) / 2.0, sh = std::sinh(2.0 * r) / 2.0;
  Eigen::Matrix4d sigma;
  sigma << ch, 0, sh, 0,
           0, ch, 0, -sh,
           sh, 0, ch, 0,
           0, -sh, 0, ch;
  const double decay = std::exp(-gamma * t);
  sigma = decay * sigma + (1.0 - decay) * (n_t + 0.5) * Eigen::Matrix4d::Identity();
  const Eigen::Vector4d flip(1.0, 1.0, 1.0, -1.0);
  return flip.asDiagonal() * sigma * flip.asDiagonal();
}

inline double twb_pt_symplectic(double r, double n_t, double gamma, double t) {
  return symplectic_spectrum(evolved_twb_pt_cm(r, n_t, gamma, t))[0];
}

/// Numeric Gaussian separation time: root of ν̃₋(t) = 1/2 by bracketing + bisection.
inline double numeric_t_g(double r, double n_t, double gamma = 1.0) {
  auto f = [&](double t) { return twb_pt_symplectic(r, n_t, gamma, t) - 0.5; };
  double hi = 1.0;
  while (f(hi) < 0.0) hi *= 2.0;
  return bisect(f, 0.0, hi);
}

/// Random normalized real-or-complex coefficient vector of random length.
inline std::vector<std::complex<double>> random_coefficients(std::mt19937_64& rng, int max_len,
                                                             bool complex_phases) {
  std::uniform_int_distribution<int> len_dist(1, max_len);
  std::uniform_real_distribution<double> mag(0.0, 1.0), phase(0.0, 2.0 * M_PI);
  const int len = len_dist(rng);
  std::vector<std::complex<double>> c(len);
  double norm = 0.0;
  for (auto& v : c) {
    const double m = mag(rng);
    v = complex_phases ? std::polar(m, phase(rng)) : std::complex<double>(m, 0.0);
    norm += m * m;
  }
  if (norm == 0.0) {
    c[0] = 1.0;
    norm = 1.0;
  }
  for (auto& v : c) v /= std::sqrt(norm);
  return c;
}

}  // namespace pnes::oracle
