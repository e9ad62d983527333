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

#include "pnes/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "pnes/errors.hpp"

namespace pnes {

FockCutoff::FockCutoff(int dim) : dim_(dim) {
  if (dim < 2) {
    throw InvalidInput("Fock cutoff must be at least 2, got " + std::to_string(dim));
  }
}

Index index_pack(int n1, int n2, FockCutoff cutoff) {
  const int d = cutoff.dim();
  if (n1 < 0 || n1 >= d || n2 < 0 || n2 >= d) {
    throw InvalidInput("photon numbers (" + std::to_string(n1) + "," + std::to_string(n2) +
                       ") outside cutoff " + std::to_string(d));
  }
  return Index(n1) * d + n2;
}

ModePair index_unpack(Index index, FockCutoff cutoff) {
  if (index < 0 || index >= cutoff.two_mode_dim()) {
    throw InvalidInput("packed index " + std::to_string(index) + " outside two-mode dimension " +
                       std::to_string(cutoff.two_mode_dim()));
  }
  const int d = cutoff.dim();
  return {int(index / d), int(index % d)};
}

TwoModeState::TwoModeState(FockCutoff cutoff, ComplexMatrix matrix, double tail_bound)
    : cutoff_(cutoff), matrix_(std::move(matrix)), tail_bound_(tail_bound) {
  const Index n = cutoff_.two_mode_dim();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw InvalidInput("density matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!(tail_bound_ >= 0.0)) {
    throw InvalidInput("tail bound must be non-negative");
  }
}

bool TwoModeState::has_sector_structure() const {
  const int d = dim();
  for (Index j = 0; j < matrix_.cols(); ++j) {
    const int m1 = int(j / d), m2 = int(j % d);
    for (Index i = 0; i < matrix_.rows(); ++i) {
      const int n1 = int(i / d), n2 = int(i % d);
      if (n1 - m1 != n2 - m2 && matrix_(i, j) != Complex(0.0)) return false;
    }
  }
  return true;
}

double mean_total_photons(const TwoModeState& rho) {
  const int d = rho.dim();
  double energy = 0.0;
  for (int n1 = 0; n1 < d; ++n1) {
    for (int n2 = 0; n2 < d; ++n2) {
      energy += (n1 + n2) * rho(n1, n2, n1, n2).real();
    }
  }
  return energy;
}

namespace {

double hermiticity_deviation(const ComplexMatrix& m) {
  double worst = 0.0;
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i <= j; ++i) {
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return worst;
}

double smallest_eigenvalue(const ComplexMatrix& block) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(block, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

}  // namespace

double min_eigenvalue(const TwoModeState& rho) {
  const ComplexMatrix& m = rho.matrix();
  if (!rho.has_sector_structure()) return smallest_eigenvalue(m);

  // rho only couples (n1, n2) to (m1, m2) with equal n1 - n2.
  const int d = rho.dim();
  const FockCutoff cutoff = rho.cutoff();
  double lowest = std::numeric_limits<double>::infinity();
  std::vector<Index> members;
  for (int diff = -(d - 1); diff <= d - 1; ++diff) {
    members.clear();
    for (int n1 = std::max(0, diff); n1 < d && n1 - diff < d; ++n1) {
      members.push_back(index_pack(n1, n1 - diff, cutoff));
    }
    const Index size = Index(members.size());
    ComplexMatrix block(size, size);
    for (Index a = 0; a < size; ++a) {
      for (Index b = 0; b < size; ++b) block(a, b) = m(members[a], members[b]);
    }
    lowest = std::min(lowest, smallest_eigenvalue(block));
  }
  return lowest;
}

SanityReport sanity_check(const TwoModeState& rho, const ToleranceProfile& tol) {
  SanityReport report;
  report.tail_bound = rho.tail_bound();
  report.trace_deviation = std::abs(rho.trace() - Complex(1.0));
  report.hermiticity_deviation = hermiticity_deviation(rho.matrix());
  report.min_eigenvalue = min_eigenvalue(rho);
  report.trace_ok = report.trace_deviation <= tol.trace + rho.tail_bound();
  report.hermitian_ok = report.hermiticity_deviation <= tol.hermiticity;
  report.positive_ok = report.min_eigenvalue >= tol.min_eigenvalue;
  return report;
}

}  // namespace pnes
