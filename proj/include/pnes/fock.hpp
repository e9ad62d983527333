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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace pnes {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Index = Eigen::Index;

/// Number of Fock levels kept per mode (levels 0..dim-1).
class FockCutoff {
 public:
  explicit FockCutoff(int dim);

  int dim() const noexcept { return dim_; }
  /// Dimension of the two-mode space, dim².
  Index two_mode_dim() const noexcept { return Index(dim_) * dim_; }

  friend bool operator==(FockCutoff, FockCutoff) = default;

 private:
  int dim_;
};

struct ModePair {
  int n1;
  int n2;
  friend bool operator==(ModePair, ModePair) = default;
};

/// Row-major packing (n1, n2) -> n1*D + n2.
Index index_pack(int n1, int n2, FockCutoff cutoff);
ModePair index_unpack(Index index, FockCutoff cutoff);

/// Truncated two-mode density matrix in the packed Fock basis.
///
/// Construction only checks shapes; physical validity is reported by
/// sanity_check() so that deliberately broken matrices can still be inspected.
class TwoModeState {
 public:
  TwoModeState(FockCutoff cutoff, ComplexMatrix matrix, double tail_bound = 0.0);

  FockCutoff cutoff() const noexcept { return cutoff_; }
  int dim() const noexcept { return cutoff_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  /// Probability weight estimated to lie beyond the cutoff.
  double tail_bound() const noexcept { return tail_bound_; }

  /// Element <n1 n2| rho |m1 m2>.
  Complex operator()(int n1, int n2, int m1, int m2) const {
    return matrix_(index_pack(n1, n2, cutoff_), index_pack(m1, m2, cutoff_));
  }

  Complex trace() const { return matrix_.trace(); }

  /// True when every nonzero element satisfies n1 - m1 == n2 - m2.
  bool has_sector_structure() const;

 private:
  FockCutoff cutoff_;
  ComplexMatrix matrix_;
  double tail_bound_;
};

/// <a1†a1 + a2†a2>, the total mean photon number of both modes.
double mean_total_photons(const TwoModeState& rho);

struct ToleranceProfile {
  double trace = 1e-10;
  double hermiticity = 1e-12;
  double min_eigenvalue = -1e-8;
};

struct SanityReport {
  double trace_deviation = 0.0;
  double hermiticity_deviation = 0.0;
  double min_eigenvalue = 0.0;
  double tail_bound = 0.0;
  bool trace_ok = true;
  bool hermitian_ok = true;
  bool positive_ok = true;

  bool ok() const noexcept { return trace_ok && hermitian_ok && positive_ok; }
};

SanityReport sanity_check(const TwoModeState& rho, const ToleranceProfile& tol = {});

/// Smallest eigenvalue of rho. Uses the n1-n2 block decomposition when the
/// state has sector structure, the dense Hermitian solver otherwise.
double min_eigenvalue(const TwoModeState& rho);

}  // namespace pnes
