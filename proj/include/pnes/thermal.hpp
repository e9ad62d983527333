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

namespace pnes {

inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J / K

/// Bose-Einstein occupation 1/(exp(hν/k_B T) − 1) of a mode at `frequency_hz`.
double thermal_occupation(double frequency_hz, double temperature_k);

/// Temperature at which a mode of `frequency_hz` holds `occupation` thermal photons.
double temperature_for_occupation(double frequency_hz, double occupation);

}  // namespace pnes
