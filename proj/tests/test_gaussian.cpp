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
#include "pnes/channel.hpp"
#include "pnes/errors.hpp"
#include "pnes/gaussian.hpp"
#include "pnes/states.hpp"

using namespace pnes;

TEST_CASE("twin-beam covariance and its evolution") {
  const SymmetricStdForm f = twb_cm(0.5);
  CHECK(f.a == doctest::Approx(0.7715403174076).epsilon(1e-12));
  CHECK(f.c == doctest::Approx(0.5876005968219).epsilon(1e-12));
  const SymmetricStdForm g = evolve_cm(f, ChannelParams::thermal(0.25), 1.0);
  CHECK(g.a == doctest::Approx(0.7579242399306).epsilon(1e-12));
  const SymmetricStdForm v = evolve_cm(twb_cm(0.0), ChannelParams::thermal(0.0), 1.0);
  CHECK(v.a == doctest::Approx(0.5));
  CHECK(v.c == 0.0);
  CHECK(evolve_cm(twb_cm(1.0), ChannelParams::thermal(0.0), 1.0).c ==
        doctest::Approx(std::exp(-1.0) * std::sinh(2.0) / 2.0));
  CHECK(twb_cm(0.0).matrix().isApprox(0.5 * CovarianceMatrix::Identity()));
  CHECK_THROWS_AS(twb_cm(-0.1), InvalidInput);
}

TEST_CASE("standard-form round trip and rejection") {
  const SymmetricStdForm f{1.3, -0.4};
  const SymmetricStdForm back = to_symmetric_std_form(f.matrix());
  CHECK(back.a == doctest::Approx(1.3));
  CHECK(back.c == doctest::Approx(-0.4));
  CovarianceMatrix bad = f.matrix();
  bad(0, 0) += 0.1;
  CHECK_THROWS_AS(to_symmetric_std_form(bad), DiagnosticError);
}

TEST_CASE("symmetric-form shortcut agrees with the invariant formula and the oracle") {
  for (double r : {0.1, 0.5, 1.0, 1.7}) {
    for (double n_t : {0.0, 0.2, 1.0}) {
      for (double t : {0.0, 0.3, 1.5}) {
        const SymmetricStdForm f = evolve_cm(twb_cm(r), ChannelParams::thermal(n_t), t);
        const double fast = nu_tilde_minus(f);
        CHECK(std::abs(fast - nu_tilde_minus(f.matrix())) < 1e-12);
        CHECK(std::abs(fast - oracle::twb_pt_symplectic(r, n_t, 1.0, t)) < 1e-10);
        CHECK(std::abs(f.a + std::abs(f.c) - nu_tilde_plus(f.matrix())) < 1e-12);
        // ρ itself is physical
        CHECK(nu_minus(f.matrix()) >= 0.5 - 1e-7);
      }
    }
  }
}

TEST_CASE("general covariance: invariants match the direct symplectic spectrum") {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::Matrix4d s;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) s(i, j) = nd(rng);
    const Eigen::Matrix4d sigma = s * s.transpose() + 2.0 * Eigen::Matrix4d::Identity();
    const auto spectrum = oracle::symplectic_spectrum(sigma);
    CHECK(nu_minus(sigma) == doctest::Approx(spectrum[0]).epsilon(1e-10));
    Eigen::Matrix4d pt = sigma;
    const Eigen::Vector4d flip(1.0, 1.0, 1.0, -1.0);
    pt = flip.asDiagonal() * sigma * flip.asDiagonal();
    const auto spectrum_pt = oracle::symplectic_spectrum(pt);
    CHECK(nu_tilde_minus(sigma) == doctest::Approx(spectrum_pt[0]).epsilon(1e-10));
    CHECK(nu_tilde_plus(sigma) == doctest::Approx(spectrum_pt[1]).epsilon(1e-10));
  }
}

TEST_CASE("closed-form Gaussian separation time") {
  CHECK(t_g_closed(1.0, ChannelParams::thermal(0.25)) == doctest::Approx(1.004055950280).epsilon(1e-11));
  CHECK(t_g_closed(0.0, ChannelParams::thermal(0.25)) == 0.0);
  CHECK(std::isinf(t_g_closed(0.5, ChannelParams::thermal(0.0))));
  CHECK(t_g_closed(1.0, ChannelParams::thermal(0.25, 2.0)) == doctest::Approx(0.5020279751402).epsilon(1e-11));
  for (double r : {0.05, 0.25, 0.5, 1.0, 2.0}) {
    for (double n_t : {0.01, 0.1, 0.25, 1.0, 5.0}) {
      CHECK(t_g_closed(r, ChannelParams::thermal(n_t)) ==
            doctest::Approx(oracle::numeric_t_g(r, n_t)).epsilon(1e-9));
    }
  }
  // tiny N_T stays accurate
  const double r = 0.5, n_t = 1e-12;
  CHECK(t_g_closed(r, ChannelParams::thermal(n_t)) ==
        doctest::Approx(std::log(1.0 + (1.0 - std::exp(-2.0 * r)) / (2.0 * n_t))).epsilon(1e-12));
}

TEST_CASE("t_G increases with squeezing and decreases with temperature") {
  double prev = 0.0;
  for (int i = 1; i <= 40; ++i) {
    const double t = t_g_closed(0.1 * i, ChannelParams::thermal(0.3));
    CHECK(t > prev);
    prev = t;
  }
  prev = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 40; ++i) {
    const double t = t_g_closed(0.7, ChannelParams::thermal(0.05 * i));
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("Simon criterion flips exactly once along the evolution") {
  const ChannelParams p = ChannelParams::thermal(0.4);
  const double r = 0.8;
  const double t_g = t_g_closed(r, p);
  int flips = 0;
  bool prev = simon_separable(twb_cm(r));
  CHECK_FALSE(prev);
  for (int i = 1; i <= 400; ++i) {
    const bool now = simon_separable(evolve_cm(twb_cm(r), p, 0.01 * i));
    if (now != prev) {
      ++flips;
      CHECK(0.01 * i >= t_g);
      CHECK(0.01 * (i - 1) < t_g);
    }
    prev = now;
  }
  CHECK(flips == 1);
  CHECK(nu_tilde_minus(evolve_cm(twb_cm(r), p, t_g)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("Gaussian negativity") {
  // pure twin beam: N = (e^{2r} - 1)/2 = λ/(1-λ)
  for (double r : {0.1, 0.5, 1.0}) {
    const double lambda = std::tanh(r);
    CHECK(gaussian_negativity(twb_cm(r)) == doctest::Approx(lambda / (1.0 - lambda)).epsilon(1e-12));
    CHECK(gaussian_negativity(twb_cm(r).matrix()) == doctest::Approx(lambda / (1.0 - lambda)).epsilon(1e-10));
  }
  CHECK(gaussian_negativity(twb_cm(0.0)) == 0.0);
  const ChannelParams p = ChannelParams::thermal(0.5);
  CHECK(gaussian_negativity(evolve_cm(twb_cm(0.5), p, t_g_closed(0.5, p) * 1.01)) == 0.0);
  // unphysical: ν̃₊ < 1/2
  CHECK_THROWS_AS(gaussian_negativity(SymmetricStdForm{0.2, 0.1}), DiagnosticError);
}

TEST_CASE("reference negativity for a given energy") {
  CHECK(reference_ng(1.0) == doctest::Approx(1.0 / (std::sqrt(3.0) - 1.0)).epsilon(1e-12));
  CHECK(reference_ng(1.0) == doctest::Approx(1.3660254037844).epsilon(1e-12));
  CHECK(reference_ng(0.0) == 0.0);
  // the twin beam of that energy has that negativity
  for (double e : {0.013, 0.3, 2.0}) {
    const double r = twb_squeezing_for_energy(e);
    CHECK(2.0 * std::sinh(r) * std::sinh(r) == doctest::Approx(e));
    CHECK(gaussian_negativity(twb_cm(r)) == doctest::Approx(reference_ng(e)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(reference_ng(-1.0), InvalidInput);
}

TEST_CASE("Fock-space covariance commutes with the channel for twin beams") {
  const int dim = 48;
  const FockCutoff cut(dim);
  for (double r : {0.3, 0.6}) {
    for (double n_t : {0.0, 0.25, 0.8}) {
      const ChannelParams p = ChannelParams::thermal(n_t);
      const PnesCoefficients c = twb_coeffs(std::tanh(r), cut);
      for (double t : {0.0, 0.4, 1.2}) {
        const CovarianceMatrix from_fock = cm_from_fock(evolve_pnes(c, p, t, cut));
        const CovarianceMatrix analytic = evolve_cm(twb_cm(r), p, t).matrix();
        CHECK((from_fock - analytic).cwiseAbs().maxCoeff() < 1e-8);
      }
    }
  }
}

TEST_CASE("covariance of a state with nonzero first moments is rejected") {
  const FockCutoff cut(3);
  Eigen::VectorXcd ket = Eigen::VectorXcd::Zero(9);
  ket(index_pack(0, 0, cut)) = 1.0 / std::sqrt(2.0);
  ket(index_pack(1, 0, cut)) = 1.0 / std::sqrt(2.0);
  CHECK_THROWS_AS(cm_from_fock(TwoModeState(cut, ket * ket.adjoint())), DiagnosticError);
}
