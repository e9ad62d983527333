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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pnes/errors.hpp"
#include "pnes/state_spec.hpp"
#include "pnes/states.hpp"

using namespace pnes;

namespace {

const FockCutoff kBig(64);

std::vector<std::complex<double>> as_vector(const PnesCoefficients& c) {
  return {c.coefficients().begin(), c.coefficients().end()};
}

}  // namespace

TEST_CASE("twb coefficients") {
  const PnesCoefficients vac = twb_coeffs(0.0, FockCutoff(8));
  CHECK(vac[0] == Complex(1.0));
  CHECK(vac[1] == Complex(0.0));
  CHECK(vac.support() == 1);

  const PnesCoefficients half = twb_coeffs(0.5, kBig);
  CHECK((half[1] / half[0]).real() == doctest::Approx(0.5));
  CHECK(half.truncation_loss() == doctest::Approx(std::pow(0.5, 128)));
  // 2 Σ n (1-λ²) λ^{2n} = 2λ²/(1-λ²)
  CHECK(pnes_energy(half) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(pure_negativity(half) == doctest::Approx(1.0).epsilon(1e-13));

  CHECK_THROWS_AS(twb_coeffs(1.0, kBig), InvalidInput);
  CHECK_THROWS_AS(twb_coeffs(-0.1, kBig), InvalidInput);
}

TEST_CASE("twb truncation records the lost weight") {
  const PnesCoefficients c = twb_coeffs(0.6, FockCutoff(10));
  CHECK(c.truncation_loss() == doctest::Approx(std::pow(0.36, 10)));
  double norm = 0.0;
  for (auto v : c.coefficients()) norm += std::norm(v);
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pssv coefficients and normalization") {
  const PnesCoefficients c = pssv_coeffs(0.1, kBig);
  CHECK((c[1] / c[0]).real() == doctest::Approx(0.2));
  double norm = 0.0;
  for (auto v : c.coefficients()) norm += std::norm(v);
  CHECK(std::abs(norm - 1.0) < 1e-12);

  // Closed form against brute-force summation; both give 96.0692079...
  CHECK(pssv_normalization(0.1) == doctest::Approx(1.0 / oracle::pssv_series(0.1)).epsilon(1e-13));
  CHECK(pssv_normalization(0.1) == doctest::Approx(96.06920792079).epsilon(1e-11));
  for (double x : {0.01, 0.2, 0.5, 0.8}) {
    CHECK(pssv_normalization(x) == doctest::Approx(1.0 / oracle::pssv_series(x)).epsilon(1e-12));
  }
  // Unnormalized amplitude √N (n+1) x^{n+1} survives normalization untouched.
  CHECK(c[0].real() == doctest::Approx(std::sqrt(pssv_normalization(0.1)) * 0.1).epsilon(1e-12));

  CHECK_THROWS_AS(pssv_coeffs(0.0, kBig), InvalidInput);
  CHECK_THROWS_AS(pssv_coeffs(1.0, kBig), InvalidInput);
}

TEST_CASE("psi01 coefficients") {
  CHECK(pure_negativity(psi01_coeffs(0.0)) == 0.0);
  CHECK(pure_negativity(psi01_coeffs(0.5)) == doctest::Approx(0.5));
  CHECK(pure_negativity(psi01_coeffs(0.25)) == doctest::Approx(std::sqrt(0.75 * 0.25)));
  CHECK(pure_negativity(psi01_coeffs(0.25)) == doctest::Approx(0.4330127018922));
  CHECK(pnes_energy(psi01_coeffs(0.5)) == doctest::Approx(1.0));
  CHECK(pure_entropy(psi01_coeffs(0.5)) == doctest::Approx(std::log(2.0)));
  CHECK(pure_entropy(psi01_coeffs(0.0)) == 0.0);
  CHECK_NOTHROW(psi01_coeffs(1.0));
  CHECK_THROWS_AS(psi01_coeffs(1.01), InvalidInput);
  CHECK_THROWS_AS(psi01_coeffs(-0.01), InvalidInput);
}

TEST_CASE("custom coefficients are normalized and may be complex") {
  const PnesCoefficients c = custom_coeffs({0.8 * 2, 0.6 * 2});
  CHECK(c[0].real() == doctest::Approx(0.8));
  CHECK(c[1].real() == doctest::Approx(0.6));
  const PnesCoefficients z = custom_coeffs({Complex(0.0, 1.0), 1.0});
  CHECK(pure_negativity(z) == doctest::Approx(0.5));
  CHECK_THROWS_AS(custom_coeffs({0.0, 0.0}), InvalidInput);
  CHECK_THROWS_AS(custom_coeffs({}), InvalidInput);
}

TEST_CASE("product states have zero measures") {
  const PnesCoefficients product = custom_coeffs({0.0, 0.0, 1.0});
  CHECK(pure_negativity(product) == 0.0);
  CHECK(pure_entropy(product) == 0.0);
  CHECK(pnes_energy(product) == doctest::Approx(4.0));
}

TEST_CASE("pure_negativity equals the eigensolver negativity of the projector") {
  const int dim = 7;
  std::vector<PnesCoefficients> states = {twb_coeffs(0.3, FockCutoff(dim)),
                                          pssv_coeffs(0.2, FockCutoff(dim)), psi01_coeffs(0.25),
                                          psi01_coeffs(0.5)};
  std::mt19937_64 rng(11);
  for (int i = 0; i < 10; ++i) states.push_back(custom_coeffs(oracle::random_coefficients(rng, dim, i % 2)));
  for (const auto& c : states) {
    const double dense = oracle::dense_negativity(oracle::pnes_projector(as_vector(c), dim), dim);
    CHECK(pure_negativity(c) == doctest::Approx(dense).epsilon(1e-10));
  }
}

TEST_CASE("measures increase strictly along each family") {
  for (MeasureKind kind : {MeasureKind::energy, MeasureKind::negativity, MeasureKind::entropy}) {
    double prev_twb = -1, prev_pssv = -1, prev_psi = -1;
    for (int i = 1; i < 200; ++i) {
      const double p = i / 200.0;
      const double twb = pure_measure(twb_coeffs(p * 0.95, kBig), kind);
      const double pssv = pure_measure(pssv_coeffs(p * 0.9, kBig), kind);
      const double psi = pure_measure(psi01_coeffs(0.5 * p), kind);
      CHECK(twb > prev_twb);
      CHECK(pssv > prev_pssv);
      CHECK(psi > prev_psi);
      prev_twb = twb;
      prev_pssv = pssv;
      prev_psi = psi;
    }
  }
}

TEST_CASE("solve_family_param closed-form cases") {
  CHECK(solve_family_param(Family::twb, {MeasureKind::energy, 0.0}, kBig) == 0.0);
  // λ/(1-λ) = 1
  CHECK(solve_family_param(Family::twb, {MeasureKind::negativity, 1.0}, kBig) ==
        doctest::Approx(0.5).epsilon(1e-10));
  // 2λ²/(1-λ²) = 1  =>  λ = 1/√3
  CHECK(solve_family_param(Family::twb, {MeasureKind::energy, 1.0}, reference_cutoff()) ==
        doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));
  CHECK(solve_family_param(Family::psi01, {MeasureKind::energy, 0.5}, kBig) ==
        doctest::Approx(0.25).epsilon(1e-10));
  CHECK(solve_family_param(Family::psi01, {MeasureKind::negativity, 0.5}, kBig) ==
        doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("solve_family_param round-trips across each family's range") {
  struct Case {
    Family family;
    MeasureKind kind;
    double max;
  };
  const std::vector<Case> cases = {
      {Family::twb, MeasureKind::energy, 5.0},   {Family::twb, MeasureKind::negativity, 5.0},
      {Family::twb, MeasureKind::entropy, 2.0},  {Family::pssv, MeasureKind::energy, 5.0},
      {Family::pssv, MeasureKind::negativity, 3.0}, {Family::pssv, MeasureKind::entropy, 2.0},
      {Family::psi01, MeasureKind::energy, 1.9}, {Family::psi01, MeasureKind::negativity, 0.49},
      {Family::psi01, MeasureKind::entropy, 0.69}};
  for (const Case& c : cases) {
    for (int i = 1; i <= 12; ++i) {
      const double target = c.max * i / 12.0;
      const double p = solve_family_param(c.family, {c.kind, target}, kBig);
      const double back = pure_measure(family_coeffs(c.family, p, kBig), c.kind);
      CHECK(std::abs(back - target) < 1e-9);
    }
  }
}

TEST_CASE("unattainable targets raise a range error") {
  CHECK_THROWS_AS(solve_family_param(Family::psi01, {MeasureKind::negativity, 0.6}, kBig), RangeError);
  CHECK_THROWS_AS(solve_family_param(Family::psi01, {MeasureKind::energy, 2.5}, kBig), RangeError);
  CHECK_THROWS_AS(solve_family_param(Family::twb, {MeasureKind::energy, 1000.0}, FockCutoff(8)),
                  RangeError);
  CHECK_THROWS_AS(solve_family_param(Family::pssv, {MeasureKind::energy, 0.0}, kBig), RangeError);
  CHECK_THROWS_AS(solve_family_param(Family::custom, {MeasureKind::energy, 0.1}, kBig), InvalidInput);
  CHECK_THROWS_AS(solve_family_param(Family::twb, {MeasureKind::energy, -1.0}, kBig), InvalidInput);
}

TEST_CASE("reference PSSV states: per-mode energy and entropy in bits reproduce the pairings") {
  // E0 = 0.013 pairs with eps0 = 0.1 and E0 = 0.3 with eps0 = 1.0 when E0 is
  // the per-mode photon number and eps0 the entropy in bits.
  struct Pair {
    double mode_energy, entropy_bits;
  };
  for (Pair p : {Pair{0.013, 0.1}, Pair{0.3, 1.0}}) {
    const double x = solve_family_param(Family::pssv, {MeasureKind::energy, 2.0 * p.mode_energy},
                                        reference_cutoff());
    const PnesCoefficients c = pssv_coeffs(x, reference_cutoff());
    CHECK(pnes_energy(c) == doctest::Approx(2.0 * p.mode_energy).epsilon(1e-10));
    const double bits = pure_entropy(c) / std::log(2.0);
    CHECK(std::abs(bits - p.entropy_bits) < 0.005 * p.entropy_bits);
  }
  // Total energy with negativity, the other candidate reading, misses the
  // second pairing by a factor of two.
  const double x = solve_family_param(Family::pssv, {MeasureKind::energy, 0.3}, reference_cutoff());
  CHECK(pure_negativity(pssv_coeffs(x, reference_cutoff())) == doctest::Approx(0.50999143).epsilon(1e-6));
}

TEST_CASE("pssv solved for total energy 0.013 round-trips") {
  const double x = solve_family_param(Family::pssv, {MeasureKind::energy, 0.013}, reference_cutoff());
  const PnesCoefficients c = pssv_coeffs(x, reference_cutoff());
  CHECK(std::abs(pnes_energy(c) - 0.013) < 1e-10);
  CHECK(x == doctest::Approx(0.0402948824489).epsilon(1e-9));
  CHECK(pure_entropy(c) > 0.0);
  CHECK(pure_entropy(c) == doctest::Approx(0.03924999732).epsilon(1e-8));
}

TEST_CASE("state string grammar") {
  CHECK(parse_state_spec("twb:lambda=0.5").parameter == 0.5);
  CHECK(parse_state_spec("twb:r=0.5").parameter == doctest::Approx(std::tanh(0.5)));
  CHECK(parse_state_spec("pssv:x=0.1").parameter == 0.1);
  CHECK(parse_state_spec("psi01:c1sq=0.25").parameter == 0.25);
  const StateSpec by_energy = parse_state_spec("pssv:energy=0.013");
  CHECK(pnes_energy(build_coefficients(by_energy, reference_cutoff())) == doctest::Approx(0.013).epsilon(1e-9));
  const StateSpec by_mode = parse_state_spec("pssv:mode_energy=0.013");
  CHECK(pnes_energy(build_coefficients(by_mode, reference_cutoff())) == doctest::Approx(0.026).epsilon(1e-9));
  const StateSpec custom = parse_state_spec("custom:0.8,0.6");
  const PnesCoefficients c = build_coefficients(custom, FockCutoff(4));
  CHECK(c[0].real() == doctest::Approx(0.8));
  CHECK(c.family() == Family::custom);
}

TEST_CASE("malformed state strings name the offending token") {
  auto message = [](const char* text) {
    try {
      parse_state_spec(text);
    } catch (const InvalidInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("bogus:x=1").find("bogus") != std::string::npos);
  CHECK(message("twb:lambda=abc").find("abc") != std::string::npos);
  CHECK(message("twb:x=0.1").find("'x'") != std::string::npos);
  CHECK(message("twb").find("twb") != std::string::npos);
  CHECK(message("twb:lambda=1.5").find("1.5") != std::string::npos);
  CHECK(message("custom:0.8,,0.6") != "");
}

TEST_CASE("tail cutoff covers the state to the requested tolerance") {
  const StateSpec spec = parse_state_spec("twb:lambda=0.5");
  const int dim = tail_cutoff_dim(spec, 1e-12);
  // weight beyond D is 0.25^D
  CHECK(std::pow(0.25, dim) < 1e-12);
  CHECK(std::pow(0.25, dim - 1) >= 1e-12);
  CHECK(tail_cutoff_dim(parse_state_spec("psi01:c1sq=0.5"), 1e-12) == 2);
}
