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

#include "pnes/states.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pnes/errors.hpp"

namespace pnes {

namespace {

constexpr double kOpenBracketTop = 1.0 - 1e-9;
constexpr int kBisectionCap = 200;
constexpr double kMatchTolerance = 1e-10;

double norm_squared(std::span<const Complex> coeffs) {
  double sum = 0.0;
  for (const Complex& c : coeffs) sum += std::norm(c);
  return sum;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::twb: return "twb";
    case Family::pssv: return "pssv";
    case Family::psi01: return "psi01";
    case Family::custom: return "custom";
  }
  return "unknown";
}

PnesCoefficients::PnesCoefficients(std::vector<Complex> coeffs, Family family, double parameter,
                                   double truncation_loss)
    : coeffs_(std::move(coeffs)),
      family_(family),
      parameter_(parameter),
      truncation_loss_(truncation_loss) {
  if (coeffs_.empty()) throw InvalidInput("coefficient vector is empty");
  const double norm2 = norm_squared(coeffs_);
  if (!std::isfinite(norm2) || norm2 <= 0.0) {
    throw InvalidInput("coefficient vector has no finite nonzero entry");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Complex& c : coeffs_) c *= scale;
}

std::size_t PnesCoefficients::support() const noexcept {
  std::size_t last = coeffs_.size();
  while (last > 1 && coeffs_[last - 1] == Complex(0.0)) --last;
  return last;
}

PnesCoefficients twb_coeffs(double lambda, FockCutoff cutoff) {
  if (!(lambda >= 0.0 && lambda < 1.0)) {
    throw InvalidInput("twin-beam lambda must lie in [0, 1), got " + std::to_string(lambda));
  }
  const int d = cutoff.dim();
  std::vector<Complex> coeffs(d);
  double power = 1.0;
  for (int n = 0; n < d; ++n) {
    coeffs[n] = power;
    power *= lambda;
  }
  // Normalized geometric weight beyond level D-1 is λ^{2D}.
  const double loss = std::pow(lambda, 2.0 * d);
  return PnesCoefficients(std::move(coeffs), Family::twb, lambda, loss);
}

double pssv_normalization(double x) {
  const double y = x * x;
  return std::pow(1.0 - y, 3) / (y * (1.0 + y));
}

PnesCoefficients pssv_coeffs(double x, FockCutoff cutoff) {
  if (!(x > 0.0 && x < 1.0)) {
    throw InvalidInput("PSSV x must lie in (0, 1), got " + std::to_string(x));
  }
  const int d = cutoff.dim();
  const double norm = pssv_normalization(x);
  std::vector<Complex> coeffs(d);
  double power = x;
  for (int n = 0; n < d; ++n) {
    coeffs[n] = std::sqrt(norm) * (n + 1) * power;
    power *= x;
  }
  // Tail Σ_{n≥D} N (n+1)² y^{n+1}, summed until the terms stop mattering.
  const double y = x * x;
  double loss = 0.0;
  double ypow = std::pow(y, d + 1);
  for (int n = d; n < d + 100000 && ypow > 0.0; ++n) {
    const double term = norm * double(n + 1) * double(n + 1) * ypow;
    loss += term;
    if (term < 1e-18 * loss) break;
    ypow *= y;
  }
  return PnesCoefficients(std::move(coeffs), Family::pssv, x, loss);
}

PnesCoefficients psi01_coeffs(double c1_sq) {
  if (!(c1_sq >= 0.0 && c1_sq <= 1.0)) {
    throw InvalidInput("psi01 |c1|^2 must lie in [0, 1], got " + std::to_string(c1_sq));
  }
  return PnesCoefficients({std::sqrt(1.0 - c1_sq), std::sqrt(c1_sq)}, Family::psi01, c1_sq);
}

PnesCoefficients custom_coeffs(std::vector<Complex> coeffs) {
  return PnesCoefficients(std::move(coeffs), Family::custom,
                          std::numeric_limits<double>::quiet_NaN());
}

PnesCoefficients family_coeffs(Family family, double parameter, FockCutoff cutoff) {
  switch (family) {
    case Family::twb: return twb_coeffs(parameter, cutoff);
    case Family::pssv: return pssv_coeffs(parameter, cutoff);
    case Family::psi01: return psi01_coeffs(parameter);
    case Family::custom: break;
  }
  throw InvalidInput("custom states have no family parameter");
}

double pnes_energy(const PnesCoefficients& coeffs) {
  double sum = 0.0;
  const auto c = coeffs.coefficients();
  for (std::size_t n = 0; n < c.size(); ++n) sum += double(n) * std::norm(c[n]);
  return 2.0 * sum;
}

double pure_negativity(const PnesCoefficients& coeffs) {
  double l1 = 0.0;
  for (const Complex& c : coeffs.coefficients()) l1 += std::abs(c);
  return std::max(0.0, (l1 * l1 - 1.0) / 2.0);
}

double pure_entropy(const PnesCoefficients& coeffs) {
  double entropy = 0.0;
  for (const Complex& c : coeffs.coefficients()) {
    const double p = std::norm(c);
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

TwoModeState pnes_density(const PnesCoefficients& coeffs, FockCutoff cutoff) {
  const std::size_t support = coeffs.support();
  if (support > std::size_t(cutoff.dim())) {
    throw InvalidInput("state support " + std::to_string(support) + " exceeds cutoff " +
                       std::to_string(cutoff.dim()));
  }
  ComplexMatrix rho = ComplexMatrix::Zero(cutoff.two_mode_dim(), cutoff.two_mode_dim());
  for (std::size_t n = 0; n < support; ++n) {
    for (std::size_t m = 0; m < support; ++m) {
      rho(index_pack(int(n), int(n), cutoff), index_pack(int(m), int(m), cutoff)) =
          coeffs[n] * std::conj(coeffs[m]);
    }
  }
  return TwoModeState(cutoff, std::move(rho), coeffs.truncation_loss());
}

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::energy: return "energy";
    case MeasureKind::negativity: return "negativity";
    case MeasureKind::entropy: return "entropy";
  }
  return "unknown";
}

MeasureKind measure_kind_from_string(std::string_view name) {
  if (name == "energy") return MeasureKind::energy;
  if (name == "negativity") return MeasureKind::negativity;
  if (name == "entropy") return MeasureKind::entropy;
  throw InvalidInput("unknown measure '" + std::string(name) + "'");
}

double pure_measure(const PnesCoefficients& coeffs, MeasureKind kind) {
  switch (kind) {
    case MeasureKind::energy: return pnes_energy(coeffs);
    case MeasureKind::negativity: return pure_negativity(coeffs);
    case MeasureKind::entropy: return pure_entropy(coeffs);
  }
  return 0.0;
}

double solve_family_param(Family family, MatchTarget target, FockCutoff cutoff) {
  if (!std::isfinite(target.value) || target.value < 0.0) {
    throw InvalidInput("match target must be finite and non-negative");
  }
  if (family == Family::custom) throw InvalidInput("custom states cannot be parameter-matched");

  double lo = 0.0;
  double hi = kOpenBracketTop;
  if (family == Family::psi01) hi = target.kind == MeasureKind::energy ? 1.0 : 0.5;

  // Every measure vanishes on the product-state end of each family.
  auto measure = [&](double p) {
    if (p == 0.0) return 0.0;
    return pure_measure(family_coeffs(family, p, cutoff), target.kind);
  };

  const double top = measure(hi);
  if (target.value == 0.0) {
    if (family == Family::pssv) {
      throw RangeError("pssv cannot reach zero " + std::string(to_string(target.kind)) +
                       ": the x -> 0 limit is not a valid state");
    }
    return 0.0;
  }
  if (target.value > top) {
    throw RangeError(std::string(to_string(family)) + " " + std::string(to_string(target.kind)) +
                     " target " + std::to_string(target.value) + " outside attainable range [0, " +
                     std::to_string(top) + "] at cutoff " + std::to_string(cutoff.dim()));
  }

  double best = hi;
  double best_error = std::abs(top - target.value);
  for (int iter = 0; iter < kBisectionCap; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double value = measure(mid);
    const double error = std::abs(value - target.value);
    if (error < best_error) {
      best = mid;
      best_error = error;
    }
    if (value < target.value) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (best_error > kMatchTolerance) {
    throw ConvergenceError("bisection for " + std::string(to_string(family)) +
                           " did not reach 1e-10 (residual " + std::to_string(best_error) + ")");
  }
  return best;
}

}  // namespace pnes
