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

#include "pnes/thermal.hpp"

#include <cmath>

#include "pnes/errors.hpp"

namespace pnes {

double thermal_occupation(double frequency_hz, double temperature_k) {
  if (!(frequency_hz > 0.0) || !(temperature_k > 0.0)) {
    throw InvalidInput("frequency and temperature must be positive");
  }
  return 1.0 / std::expm1(kPlanck * frequency_hz / (kBoltzmann * temperature_k));
}

double temperature_for_occupation(double frequency_hz, double occupation) {
  if (!(frequency_hz > 0.0) || !(occupation > 0.0)) {
    throw InvalidInput("frequency and occupation must be positive");
  }
  return kPlanck * frequency_hz / (kBoltzmann * std::log1p(1.0 / occupation));
}

}  // namespace pnes
