// Copyright 2026 The seqmps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include <doctest.h>

#include <cmath>

#include "seqmps/cavity.hpp"
#include "seqmps/gates.hpp"
#include "seqmps/random.hpp"

using namespace seqmps;

namespace {
constexpr int kB = 0, kA = 1, kE = 2;
}

TEST_CASE("free Hamiltonian is diagonal with the frame shift") {
  CavityModel m{0.0, 0.0, 120.0, 0.7, 3};
  Matrix h = full_hamiltonian(m);
  int nf = 4;
  CHECK(max_abs(h - Matrix(h.diagonal().asDiagonal())) < 1e-14);
  for (int n = 0; n < nf; ++n) {
    CHECK(h(kA * nf + n, kA * nf + n).real() ==
          doctest::Approx(-120.0 * (1 + n) + 0.7));
    CHECK(h(kB * nf + n, kB * nf + n).real() == doctest::Approx(-120.0 * n));
    CHECK(h(kE * nf + n, kE * nf + n).real() == doctest::Approx(-120.0 * n));
  }
}

TEST_CASE("full Hamiltonian couplings and hermiticity") {
  CavityModel m = CavityModel::resonant(1.3, 0.8, 150.0, 4);
  Matrix h = full_hamiltonian(m);
  CHECK(max_abs(h - h.adjoint()) < 1e-14);
  int nf = 5;
  // laser couples |e,n> and |a,n> with omega/2
  CHECK(std::abs(h(kE * nf + 2, kA * nf + 2) - Complex(0.4, 0.0)) < 1e-14);
  // cavity couples |e,n-1> and |b,n> with g sqrt(n)
  CHECK(std::abs(h(kE * nf + 0, kB * nf + 1) - Complex(1.3, 0.0)) < 1e-14);
  CHECK(std::abs(h(kE * nf + 1, kB * nf + 2) - Complex(1.3 * std::sqrt(2.0), 0.0)) <
        1e-14);
  CHECK_THROWS_AS(full_hamiltonian(CavityModel{1, 1, 0.0, 0, 4}),
                  std::invalid_argument);
}

TEST_CASE("effective Hamiltonian structure") {
  double g = 1.0, om = 0.9, del = 180.0;
  CavityModel m = CavityModel::resonant(g, om, del, 4);
  Matrix h = adiabatic_hamiltonian(m);
  int nf = 5;
  CHECK(max_abs(h - h.adjoint()) < 1e-14);
  // Jaynes-Cummings ladder element sqrt(n) g omega / (2 Delta)
  for (int n = 1; n <= 4; ++n)
    CHECK(std::abs(h(kA * nf + n - 1, kB * nf + n) -
                   Complex(std::sqrt(n) * g * om / (2 * del), 0.0)) < 1e-14);
  // with the resonant drive the one-excitation block sits at zero energy
  CHECK(std::abs(h(kA * nf + 0, kA * nf + 0)) < 1e-14);
  CHECK(std::abs(h(kB * nf + 1, kB * nf + 1)) < 1e-14);

  // omega = 0 leaves only the photon-number shift (in this frame)
  CavityModel m0{g, 0.0, del, 0.0, 4};
  Matrix h0 = adiabatic_hamiltonian(m0);
  Matrix expected = Matrix::Zero(2 * nf, 2 * nf);
  for (int n = 0; n < nf; ++n) {
    expected(kB * nf + n, kB * nf + n) = (n - 1) * g * g / del;
    expected(kA * nf + n, kA * nf + n) = -g * g / del;
  }
  CHECK(max_abs(h0 - expected) < 1e-14);
}

TEST_CASE("selective Hamiltonian block identity") {
  for (double del : {60.0, 150.0, 300.0}) {
    CavityModel m = CavityModel::resonant(1.0, 1.4, del, 4);
    Matrix hsel = selective_hamiltonian(m);
    // eigenvalues are (-k, 0, 0, +k) on the doublet
    Eigen::SelfAdjointEigenSolver<Matrix> es(hsel);
    double k = m.g * m.omega / (2 * del);
    CHECK(es.eigenvalues()(0) == doctest::Approx(-k).epsilon(1e-12));
    CHECK(std::abs(es.eigenvalues()(1)) < 1e-14);
    CHECK(std::abs(es.eigenvalues()(2)) < 1e-14);
    CHECK(es.eigenvalues()(3) == doctest::Approx(k).epsilon(1e-12));

    // the resonant block of the effective Hamiltonian equals it elementwise
    Matrix had = adiabatic_hamiltonian(m);
    int nf = m.n_max + 1;
    long a0 = kA * nf + 0, b1 = kB * nf + 1;
    CHECK(std::abs(had(a0, a0) - hsel(2, 2)) < 1e-14);
    CHECK(std::abs(had(b1, b1) - hsel(1, 1)) < 1e-14);
    CHECK(std::abs(had(a0, b1) - hsel(2, 1)) < 1e-14);
    CHECK(std::abs(had(b1, a0) - hsel(1, 2)) < 1e-14);
  }
  CavityModel z{0.0, 0.0, 100.0, 0.0, 4};
  CHECK(max_abs(selective_hamiltonian(z)) < 1e-15);
}

TEST_CASE("evolve basics") {
  Vector psi0(2);
  psi0 << 1.0, 0.0;
  Matrix h(2, 2);
  h << 0.3, 0.0, 0.0, -0.8;
  CHECK((evolve(h, 0.0, psi0) - psi0).cwiseAbs().maxCoeff() < 1e-14);
  Vector t1 = evolve(h, 2.0, psi0);
  CHECK(std::abs(t1(0) - std::exp(-kImag * 0.6)) < 1e-13);

  // resonant two-level transfer: |<1|exp(-i k X t)|0>|^2 = sin^2(k t)
  double kappa = 0.05;
  Matrix hx(2, 2);
  hx << 0.0, kappa, kappa, 0.0;
  Vector out = evolve(hx, M_PI / (2 * kappa), psi0);
  CHECK(std::norm(out(1)) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix nh(2, 2);
  nh << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(evolve(nh, 1.0, psi0), std::invalid_argument);

  Rng rng(3);
  Matrix rh = random_gaussian(6, 6, rng);
  rh = Matrix(rh + rh.adjoint());
  Vector v = random_unitary(6, rng).col(0);
  CHECK(evolve(rh, 1.7, v).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pulse realizes the +i square root of iswap") {
  CavityModel m = CavityModel::resonant(1.0, 1.0, 100.0, 4);
  SqrtIswapPulse p = sqrt_iswap_pulse(m);
  CHECK(p.duration == doctest::Approx((M_PI / 4) / (0.5 / 100.0)));

  Matrix ideal = Matrix::Identity(4, 4);
  double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  ideal(1, 1) = ideal(2, 2) = c;
  ideal(1, 2) = kImag * s;
  ideal(2, 1) = kImag * s;
  CHECK(max_abs(p.achieved_gate - ideal) < 1e-12);

  // the square is the printed iswap matrix, and the idle states are fixed
  CHECK(max_abs(p.achieved_gate * p.achieved_gate - iswap_gate()) < 1e-12);
  CHECK(std::abs(p.achieved_gate(0, 0) - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(p.achieved_gate(3, 3) - Complex(1, 0)) < 1e-12);

  CHECK_THROWS_AS(sqrt_iswap_pulse(CavityModel{0.0, 1.0, 100.0, 0.0, 4}),
                  std::invalid_argument);
}

TEST_CASE("selectivity hierarchy") {
  // frozen thresholds from the calibration sweep (Omega = g, resonant delta):
  //   Delta/g :  50      100       200       400
  //   full    :  4.79e-4 1.20e-4   2.99e-5   7.48e-6
  //   adiabatic: ~1e-16 throughout
  std::vector<double> ladder{50.0, 100.0, 200.0, 400.0};
  std::vector<double> bounds{1e-3, 2.5e-4, 6e-5, 1.5e-5};
  double prev = 1.0;
  for (size_t i = 0; i < ladder.size(); ++i) {
    CavityModel m = CavityModel::resonant(1.0, 1.0, ladder[i], 4);
    SelectivityResult full = selectivity_error(m, HamiltonianLevel::kFull);
    SelectivityResult ad = selectivity_error(m, HamiltonianLevel::kAdiabatic);
    CHECK(full.infidelity < bounds[i]);
    CHECK(full.infidelity <= prev + 1e-12);  // monotone along the ladder
    CHECK(ad.infidelity < 1e-12);
    CHECK(full.infidelity >= ad.infidelity - 1e-6);
    CHECK(full.leakage < 1e-8);
    CHECK(ad.leakage < 1e-8);
    prev = full.infidelity;
  }

  // weaker drives converge toward the ideal gate
  double last = 1.0;
  for (double om : {1.0, 0.5, 0.25}) {
    CavityModel m = CavityModel::resonant(1.0, om, 100.0, 4);
    double err = selectivity_error(m, HamiltonianLevel::kFull).infidelity;
    CHECK(err < last);
    last = err;
  }

  CavityModel small = CavityModel::resonant(1.0, 1.0, 100.0, 2);
  CHECK_THROWS_AS(selectivity_error(small, HamiltonianLevel::kFull),
                  std::invalid_argument);
}

TEST_CASE("regime diagnostics are ratios") {
  CavityModel m = CavityModel::resonant(1.0, 0.5, 200.0, 4);
  CHECK(m.adiabatic_ratio() == doctest::Approx(200.0));
  CHECK(m.selectivity_ratio() == doctest::Approx(4.0));
  CHECK(m.delta_small ==
        doctest::Approx(0.25 / (4 * 200.0) - 1.0 / 200.0));
  CHECK_THROWS_AS((CavityModel{1.0, 1.0, 0.0, 0.0, 4}.validate()),
                  std::invalid_argument);
}

TEST_CASE("selectivity sweep rows") {
  auto rows = selectivity_sweep({50.0, 100.0}, 1.0, 4);
  CHECK(rows.size() == 4);
  CHECK(rows[0].level == "full");
  CHECK(rows[1].level == "adiabatic");
  CHECK_THROWS_AS(selectivity_sweep({}, 1.0, 4), std::invalid_argument);
}

TEST_CASE("polarization pulse rotates the driven branches") {
  Matrix u = polarization_pulse();
  CHECK(is_unitary(u, 1e-12));
  // |a',vac> -> i |a,1_a>  (atom a' = 2, cavity vac = 0 -> atom a = 0, cav 1_a)
  long ap0 = 2 * 3 + 0, a1a = 0 * 3 + 1;
  CHECK(std::abs(u(a1a, ap0) - kImag) < 1e-12);
  long bp0 = 3 * 3 + 0, b1b = 1 * 3 + 2;
  CHECK(std::abs(u(b1b, bp0) - kImag) < 1e-12);

  // with omega_b = 0 the b-branch is untouched
  Matrix ua = polarization_pulse_branch_a();
  CHECK(std::abs(ua(a1a, ap0) - kImag) < 1e-12);
  CHECK(std::abs(ua(bp0, bp0) - Complex(1, 0)) < 1e-12);

  PolarizationModel pm;
  CHECK(max_abs(polarization_selective_unitary(pm, 0.0) -
                Matrix::Identity(12, 12)) < 1e-12);
  double k = pm.g_a * pm.omega_a / (2 * pm.delta_a);
  Matrix timed = polarization_selective_unitary(pm, (M_PI / 2) / k);
  CHECK(max_abs(timed - polarization_pulse()) < 1e-12);

  PolarizationModel bad;
  bad.delta_a = 0.0;
  CHECK_THROWS_AS(polarization_selective_hamiltonian(bad), std::invalid_argument);
}

TEST_CASE("three-step composition is the logical sqrt of iswap") {
  Matrix comp = polarization_sqrt_iswap();
  CHECK(is_unitary(comp, 1e-12));
  Matrix block = polarization_logical_block(comp);
  CHECK(max_abs(block - sqrt_iswap_gate()) < 1e-12);
  Matrix block2 = polarization_logical_block(Matrix(comp * comp));
  CHECK(max_abs(block2 - iswap_gate()) < 1e-12);
}

TEST_CASE("polarization decoupling maps the atom onto the last qubit") {
  Rng rng(97);
  // alpha = 1 branch: output is psi_a (x) |0>
  PureState psi_a = random_state(2, rng);
  Vector joint = Vector::Zero(4 * 4);
  joint.segment(0, 4) = psi_a.amplitudes();  // atom a block
  PureState out = polarization_decoupling(joint, 1.0, 0.0);
  CHECK(out.n_sites() == 3);
  for (long q = 0; q < 4; ++q) {
    CHECK(std::abs(out.amplitude(q * 2) - psi_a.amplitude(q)) < 1e-12);
    CHECK(std::abs(out.amplitude(q * 2 + 1)) < 1e-14);
  }

  // generic branch amplitudes with 2-photon registers
  for (int trial = 0; trial < 5; ++trial) {
    PureState pa = random_state(2, rng);
    PureState pb = random_state(2, rng);
    double th = rng.uniform() * M_PI / 2;
    Complex alpha = std::cos(th);
    Complex beta = std::sin(th) * std::exp(kImag * rng.uniform() * 6.28);
    Vector j = Vector::Zero(16);
    j.segment(0, 4) = alpha * pa.amplitudes();
    j.segment(4, 4) = beta * pb.amplitudes();
    PureState dec = polarization_decoupling(j, alpha, beta);
    Vector target = Vector::Zero(8);
    for (long q = 0; q < 4; ++q) {
      target(q * 2) = alpha * pa.amplitude(q);
      target(q * 2 + 1) = beta * pb.amplitude(q);
    }
    CHECK((dec.amplitudes() - target).cwiseAbs().maxCoeff() < 1e-12);
  }

  // malformed input: support on the primed levels
  Vector badj = Vector::Zero(16);
  badj(8) = 1.0;  // atom a' block
  CHECK_THROWS_AS(polarization_decoupling(badj, 1.0, 0.0), std::invalid_argument);
}
