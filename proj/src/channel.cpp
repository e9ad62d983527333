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

#include "pnes/channel.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "pnes/errors.hpp"
#include "pnes/matrix_exp.hpp"

namespace pnes {

ChannelParams ChannelParams::thermal(double n_t, double gamma) {
  if (!(n_t >= 0.0) || !std::isfinite(n_t)) {
    throw InvalidInput("thermal occupation N_T must be finite and >= 0");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InvalidInput("damping rate must be > 0");
  return ChannelParams(n_t, gamma);
}

ChannelParams ChannelParams::from_b_over_a(double b_over_a, double gamma) {
  if (!(b_over_a >= 0.0 && b_over_a < 1.0)) throw InvalidInput("B/A must lie in [0, 1)");
  return thermal(b_over_a / (1.0 - b_over_a), gamma);
}

SectorGenerator liouvillian_sector(const ChannelParams& params, int sector, FockCutoff cutoff) {
  const int d = std::abs(sector);
  if (d >= cutoff.dim()) {
    throw InvalidInput("sector " + std::to_string(sector) + " outside cutoff " +
                       std::to_string(cutoff.dim()));
  }
  const double a = params.a_rate();
  const double b = params.b_rate();
  const int size = cutoff.dim() - d;
  Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(size, size);
  for (int n = 0; n < size; ++n) {
    gen(n, n) = -a * (2 * n + d) - b * (2 * n + d + 2);
    if (n + 1 < size) gen(n, n + 1) = 2.0 * a * std::sqrt(double(n + 1) * double(n + d + 1));
    if (n >= 1) gen(n, n - 1) = 2.0 * b * std::sqrt(double(n) * double(n + d));
  }
  return {sector, std::move(gen)};
}

TransferTensor::TransferTensor(double time, FockCutoff cutoff,
                               std::vector<Eigen::MatrixXd> sector_propagators)
    : time_(time), cutoff_(cutoff), sectors_(std::move(sector_propagators)) {
  if (int(sectors_.size()) != cutoff_.dim()) {
    throw InvalidInput("transfer tensor needs one propagator per sector");
  }
  for (int d = 0; d < cutoff_.dim(); ++d) {
    const Eigen::Index size = cutoff_.dim() - d;
    if (sectors_[d].rows() != size || sectors_[d].cols() != size) {
      throw InvalidInput("sector propagator " + std::to_string(d) + " has the wrong shape");
    }
  }
}

const Eigen::MatrixXd& TransferTensor::sector_propagator(int sector) const {
  if (sector < 0 || sector >= dim()) {
    throw InvalidInput("sector " + std::to_string(sector) + " outside transfer tensor");
  }
  return sectors_[sector];
}

Eigen::MatrixXd TransferTensor::image(int n, int m) const {
  const int d = dim();
  if (n < 0 || m < 0 || n >= d || m >= d) throw InvalidInput("matrix unit outside cutoff");
  const int lo = std::min(n, m);
  const Eigen::MatrixXd& p = sectors_[std::abs(m - n)];
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index k = 0; k < p.rows(); ++k) out(k + n - lo, k + m - lo) = p(k, lo);
  return out;
}

TransferTensor propagator(const ChannelParams& params, double t, FockCutoff cutoff,
                          PropagatorMethod method) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidInput("evolution time must be finite and >= 0");
  std::vector<Eigen::MatrixXd> sectors;
  sectors.reserve(cutoff.dim());
  for (int d = 0; d < cutoff.dim(); ++d) {
    const SectorGenerator gen = liouvillian_sector(params, d, cutoff);
    if (method == PropagatorMethod::pade) {
      sectors.push_back(expm_pade(t * gen.matrix));
    } else {
      sectors.push_back(expm_ode(gen.matrix, t));
    }
  }
  return TransferTensor(t, cutoff, std::move(sectors));
}

TwoModeState evolve_pnes(const PnesCoefficients& coeffs, const TransferTensor& tensor,
                         double max_initial_tail) {
  const FockCutoff cutoff = tensor.cutoff();
  const int dim = cutoff.dim();
  const int support = int(coeffs.support());
  if (support > dim || coeffs.truncation_loss() > max_initial_tail) {
    const int hint = std::max(support, dim + 1);
    std::ostringstream msg;
    msg << "cutoff " << dim << " too small for the initial state (support " << support
        << ", truncation loss " << std::setprecision(3) << coeffs.truncation_loss()
        << "); need D >= " << hint;
    throw CutoffError(msg.str(), hint);
  }

  ComplexMatrix rho = ComplexMatrix::Zero(cutoff.two_mode_dim(), cutoff.two_mode_dim());
  for (int n = 0; n < support; ++n) {
    for (int m = 0; m < support; ++m) {
      const Complex weight = coeffs[n] * std::conj(coeffs[m]);
      if (weight == Complex(0.0)) continue;
      const int lo = std::min(n, m);
      const int row_shift = n - lo;
      const int col_shift = m - lo;
      const Eigen::MatrixXd& p = tensor.sector_propagator(std::abs(m - n));
      const int len = int(p.rows());
      for (int k1 = 0; k1 < len; ++k1) {
        const double f1 = p(k1, lo);
        if (f1 == 0.0) continue;
        const Index row_base = Index(k1 + row_shift) * dim + row_shift;
        const Index col_base = Index(k1 + col_shift) * dim + col_shift;
        for (int k2 = 0; k2 < len; ++k2) {
          rho(row_base + k2, col_base + k2) += weight * (f1 * p(k2, lo));
        }
      }
    }
  }
  return TwoModeState(cutoff, std::move(rho), coeffs.truncation_loss());
}

TwoModeState evolve_pnes(const PnesCoefficients& coeffs, const ChannelParams& params, double t,
                         FockCutoff cutoff, double max_initial_tail) {
  return evolve_pnes(coeffs, propagator(params, t, cutoff), max_initial_tail);
}

TwoModeState evolve_state(const TwoModeState& rho, const TransferTensor& tensor) {
  if (rho.cutoff() != tensor.cutoff()) throw InvalidInput("state and transfer tensor cutoffs differ");
  const int dim = rho.dim();
  const ComplexMatrix& in = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(in.rows(), in.cols());
  for (Index col = 0; col < in.cols(); ++col) {
    const int m1 = int(col / dim), m2 = int(col % dim);
    for (Index row = 0; row < in.rows(); ++row) {
      const Complex value = in(row, col);
      if (value == Complex(0.0)) continue;
      const int n1 = int(row / dim), n2 = int(row % dim);
      const int lo1 = std::min(n1, m1), lo2 = std::min(n2, m2);
      const Eigen::MatrixXd& p1 = tensor.sector_propagator(std::abs(m1 - n1));
      const Eigen::MatrixXd& p2 = tensor.sector_propagator(std::abs(m2 - n2));
      for (Index k1 = 0; k1 < p1.rows(); ++k1) {
        const double f1 = p1(k1, lo1);
        if (f1 == 0.0) continue;
        const Index r1 = k1 + n1 - lo1, c1 = k1 + m1 - lo1;
        for (Index k2 = 0; k2 < p2.rows(); ++k2) {
          out(r1 * dim + k2 + n2 - lo2, c1 * dim + k2 + m2 - lo2) += value * (f1 * p2(k2, lo2));
        }
      }
    }
  }
  return TwoModeState(rho.cutoff(), std::move(out), rho.tail_bound());
}

double energy_closed_form(double e0, const ChannelParams& params, double t) {
  if (e0 < 0.0 || t < 0.0) throw InvalidInput("energy and time must be non-negative");
  const double decay = std::exp(-params.gamma() * t);
  return decay * e0 + (1.0 - decay) * 2.0 * params.n_t();
}

double mode_occupation(double n0, const ChannelParams& params, double t) {
  const double decay = std::isinf(t) ? 0.0 : std::exp(-params.gamma() * t);
  return decay * n0 + (1.0 - decay) * params.n_t();
}

int thermal_cutoff_dim(double occupation, double tail_tolerance) {
  if (occupation <= 0.0) return 2;
  const double ratio = occupation / (1.0 + occupation);
  return std::max(2, int(std::ceil(std::log(tail_tolerance) / std::log(ratio))));
}

int initial_cutoff_dim(const StateSpec& spec, const CutoffPolicy& policy) {
  return std::max(policy.floor, tail_cutoff_dim(spec, policy.tail_tolerance));
}

FockCutoff horizon_cutoff(const StateSpec& spec, const ChannelParams& params, double horizon,
                          const CutoffPolicy& policy) {
  const double n0 = 0.5 * pnes_energy(build_coefficients(spec, reference_cutoff()));
  // n̄(t) moves monotonically from n0 to N_T, so the endpoints bound it.
  const double occupation = std::max(n0, mode_occupation(n0, params, horizon));
  const int dim = std::max(initial_cutoff_dim(spec, policy),
                           thermal_cutoff_dim(occupation, policy.tail_tolerance));
  if (dim > policy.max_dim) {
    throw CutoffError("policy cutoff " + std::to_string(dim) + " exceeds the maximum " +
                          std::to_string(policy.max_dim),
                      dim);
  }
  return FockCutoff(dim);
}

CheckedEvolution evolve_leak_checked(const StateSpec& spec, const ChannelParams& params, double t,
                                     const CutoffPolicy& policy, int start_dim) {
  int dim = std::max(start_dim, initial_cutoff_dim(spec, policy));
  double leak = std::numeric_limits<double>::infinity();
  while (dim <= policy.max_dim) {
    const FockCutoff cutoff(dim);
    TwoModeState state = evolve_pnes(build_coefficients(spec, cutoff), params, t, cutoff,
                                     policy.tail_tolerance);
    leak = 1.0 - state.trace().real();
    if (std::abs(leak) < policy.leak_tolerance) return {std::move(state), leak};
    dim += policy.step;
  }
  throw CutoffError("truncation leak " + std::to_string(leak) + " still above tolerance at D=" +
                        std::to_string(policy.max_dim),
                    dim);
}

}  // namespace pnes
