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

namespace pnes {

/// exp(A) by scaling and squaring with a degree-13 Padé approximant.
Eigen::MatrixXd expm_pade(const Eigen::MatrixXd& a);

struct OdeOptions {
  double rtol = 1e-12;
  double atol = 1e-14;
  long max_steps = 1'000'000;
};

/// exp(t L) obtained by integrating Y' = L Y, Y(0) = I with the adaptive
/// Dormand-Prince 5(4) pair. Independent of expm_pade; used to cross-check it.
Eigen::MatrixXd expm_ode(const Eigen::MatrixXd& generator, double t, const OdeOptions& options = {});

}  // namespace pnes
