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

#include "pnes/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pnes/errors.hpp"

namespace pnes {

ComplexMatrix partial_transpose(const TwoModeState& rho) {
  const int d = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (int n1 = 0; n1 < d; ++n1) {
    for (int n2 = 0; n2 < d; ++n2) {
      const Index row = Index(n1) * d + n2;
      for (int m1 = 0; m1 < d; ++m1) {
        for (int m2 = 0; m2 < d; ++m2) {
          out(row, Index(m1) * d + m2) = m(Index(n1) * d + m2, Index(m1) * d + n2);
        }
      }
    }
  }
  return out;
}

namespace {

struct Spectrum {
  double negative_sum = 0.0;
  double min_eigenvalue = std::numeric_limits<double>::infinity();

  void add(const Eigen::VectorXd& eigenvalues) {
    for (double e : eigenvalues) {
      if (e < 0.0) negative_sum -= e;
      min_eigenvalue = std::min(min_eigenvalue, e);
    }
  }
};

void add_eigenvalues(Spectrum& spectrum, const ComplexMatrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  spectrum.add(solver.eigenvalues());
}

// With n1 − m1 = n2 − m2 in ρ, ρ^{T₂} only couples (n1, n2) to (m1, m2) with
// n1 + n2 = m1 + m2, so it splits into blocks of fixed total photon number.
Spectrum blocked_spectrum(const TwoModeState& rho) {
  const int d = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  Spectrum spectrum;
  std::vector<int> first;
  for (int total = 0; total <= 2 * (d - 1); ++total) {
    first.clear();
    for (int n1 = std::max(0, total - (d - 1)); n1 <= std::min(total, d - 1); ++n1) {
      first.push_back(n1);
    }
    const Index size = Index(first.size());
    ComplexMatrix block(size, size);
    for (Index a = 0; a < size; ++a) {
      const int n1 = first[a], n2 = total - n1;
      for (Index b = 0; b < size; ++b) {
        const int m1 = first[b], m2 = total - m1;
        block(a, b) = m(Index(n1) * d + m2, Index(m1) * d + n2);
      }
    }
    add_eigenvalues(spectrum, block);
  }
  return spectrum;
}

}  // namespace

NegativityResult negativity(const TwoModeState& rho, EigenPath path, double threshold) {
  NegativityResult result;
  Spectrum spectrum;
  if (path == EigenPath::automatic && rho.has_sector_structure()) {
    spectrum = blocked_spectrum(rho);
    result.block_path_used = true;
  } else {
    add_eigenvalues(spectrum, partial_transpose(rho));
  }
  result.min_eigenvalue = spectrum.min_eigenvalue;
  result.value = spectrum.min_eigenvalue >= -threshold ? 0.0 : spectrum.negative_sum;
  return result;
}

SeparationResult separation_time(const PnesCoefficients& coeffs, const ChannelParams& params,
                                 FockCutoff cutoff, const SeparationOptions& options) {
  SeparationResult result;
  auto sample = [&](double t) {
    const double value =
        negativity(evolve_pnes(coeffs, params, t, cutoff), EigenPath::automatic, options.threshold)
            .value;
    result.profile.emplace_back(t, value);
    return value;
  };
  auto check_monotone = [&] {
    auto sorted = result.profile;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i].second > sorted[i - 1].second + options.monotonicity_slack) {
        std::ostringstream msg;
        msg << "negativity increased along the evolution; sampled profile:";
        for (const auto& [t, n] : sorted) msg << " (" << t << ", " << n << ")";
        throw DiagnosticError(msg.str());
      }
    }
  };

  if (sample(0.0) < options.threshold) {
    result.time = 0.0;
    return result;
  }

  // Times are handled in units of 1/Γ.
  const double unit = 1.0 / params.gamma();
  double lo = 0.0;
  double hi = options.t_start * unit;
  while (true) {
    const double value = sample(hi);
    check_monotone();
    if (value < options.threshold) break;
    if (hi >= options.t_max * unit) {
      result.time = std::numeric_limits<double>::infinity();
      result.negativity_at_t_max = value;
      return result;
    }
    lo = hi;
    hi = std::min(2.0 * hi, options.t_max * unit);
  }

  while (hi - lo > options.time_tolerance * unit) {
    const double mid = 0.5 * (lo + hi);
    if (sample(mid) < options.threshold) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  check_monotone();
  result.time = hi;
  return result;
}

}  // namespace pnes
