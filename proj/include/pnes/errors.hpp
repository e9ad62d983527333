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

#include <stdexcept>
#include <string>

namespace pnes {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition (bad index, parameter out of domain, malformed spec).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A matching target lies outside the range a family can attain.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The Fock cutoff is too small for the requested computation.
class CutoffError : public Error {
 public:
  CutoffError(const std::string& what, int required_dim)
      : Error(what), required_dim_(required_dim) {}

  /// Smallest cutoff that would satisfy the policy, or 0 when unknown.
  int required_dim() const noexcept { return required_dim_; }

 private:
  int required_dim_;
};

/// A checked numerical assumption failed (monotonicity, vanishing first moments, ...).
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

}  // namespace pnes
