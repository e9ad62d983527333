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

#include "pnes/matrix_exp.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pnes/errors.hpp"

namespace pnes {

Eigen::MatrixXd expm_pade(const Eigen::MatrixXd& a) {
  using Eigen::MatrixXd;
  if (a.rows() != a.cols()) throw InvalidInput("matrix exponential needs a square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return a;

  // Higham (2005) degree-13 coefficients and the matching 1-norm bound.
  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > theta13) squarings = int(std::ceil(std::log2(norm1 / theta13)));
  const MatrixXd scaled = a / std::ldexp(1.0, squarings);

  const MatrixXd id = MatrixXd::Identity(n, n);
  const MatrixXd a2 = scaled * scaled;
  const MatrixXd a4 = a2 * a2;
  const MatrixXd a6 = a4 * a2;
  const MatrixXd u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2);
  const MatrixXd u = scaled * (u_inner + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * id);
  const MatrixXd v_inner = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2);
  const MatrixXd v = v_inner + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  MatrixXd result = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

Eigen::MatrixXd expm_ode(const Eigen::MatrixXd& generator, double t, const OdeOptions& options) {
  using Eigen::MatrixXd;
  if (generator.rows() != generator.cols()) throw InvalidInput("generator must be square");
  if (t < 0.0) throw InvalidInput("integration time must be non-negative");
  const Eigen::Index n = generator.rows();
  MatrixXd y = MatrixXd::Identity(n, n);
  if (t == 0.0 || n == 0) return y;

  // Dormand-Prince 5(4) tableau; the system is autonomous so the nodes c_i drop out.
  constexpr double a21 = 1.0 / 5;
  constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                   a54 = -212.0 / 729;
  constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                   a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                   b6 = 11.0 / 84;
  constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                   e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double lnorm = generator.cwiseAbs().colwise().sum().maxCoeff();
  double h = std::min(t, lnorm > 0.0 ? 0.01 / lnorm : t);
  double time = 0.0;
  MatrixXd k1 = generator * y;
  for (long step = 0; step < options.max_steps; ++step) {
    if (time >= t) return y;
    h = std::min(h, t - time);
    const MatrixXd k2 = generator * (y + h * a21 * k1);
    const MatrixXd k3 = generator * (y + h * (a31 * k1 + a32 * k2));
    const MatrixXd k4 = generator * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const MatrixXd k5 = generator * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const MatrixXd k6 =
        generator * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const MatrixXd y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const MatrixXd k7 = generator * y_new;
    const MatrixXd err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const MatrixXd scale =
        (options.atol + options.rtol * y.cwiseAbs().cwiseMax(y_new.cwiseAbs()).array()).matrix();
    const double err_norm = (err.array() / scale.array()).abs().maxCoeff();
    if (err_norm <= 1.0) {
      time += h;
      y = y_new;
      k1 = k7;
    }
    const double factor =
        err_norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err_norm, -0.2), 0.2, 5.0);
    h *= factor;
  }
  throw ConvergenceError("adaptive integrator exceeded its step budget");
}

}  // namespace pnes
