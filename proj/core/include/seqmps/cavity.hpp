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

#pragma once

#include <string>
#include <vector>

#include "seqmps/pure_state.hpp"
#include "seqmps/types.hpp"

namespace seqmps {

/// Single-mode cavity model in units of g. The three-level atom has ground
/// states a, b and excited state e; basis ordering is b = 0, a = 1 (e = 2),
/// matching the two-qubit gate basis {|b,0>, |b,1>, |a,0>, |a,1>}, with
/// state index atom * (n_max + 1) + photon number.
struct CavityModel {
  double g = 1.0;
  double omega = 1.0;        // laser Rabi frequency
  double delta_large = 0.0;  // detuning of the Raman pair
  double delta_small = 0.0;  // two-photon detuning of the drive
  int n_max = 4;             // Fock cutoff

  /// Drive detuning that makes the one-excitation block resonant:
  /// omega^2/(4 Delta) - g^2/Delta.
  double resonant_delta() const;
  static CavityModel resonant(double g, double omega, double delta_large,
                              int n_max = 4);

  // Regime diagnostics, reported as ratios rather than booleans.
  double adiabatic_ratio() const;    // |Delta| / max(g, omega)
  double selectivity_ratio() const;  // 2 g / omega

  void validate() const;  // throws on Delta = 0 or n_max < 1
};

/// Static frame of the driven three-level Hamiltonian: the explicit drive
/// phase is removed by rotating level a at the drive detuning, which adds
/// +delta to the a-level diagonal. Dimension 3 (n_max + 1).
Matrix full_hamiltonian(const CavityModel& model);

/// Effective two-level Hamiltonian after eliminating the excited state, in
/// the same rotating frame (shift -delta on level a) plus a constant offset
/// -g^2/Delta so that the resonant one-excitation block sits at zero
/// energy. With the resonant drive detuning the {|a,0>, |b,1>} block equals
/// selective_hamiltonian elementwise. Dimension 2 (n_max + 1).
Matrix adiabatic_hamiltonian(const CavityModel& model);

/// The resonant block coupling g omega / (2 Delta) (|a,0><b,1| + h.c.) on
/// the {a, b} x {0, 1} space; built both directly and from the Pauli form
/// and asserted equal.
Matrix selective_hamiltonian(const CavityModel& model);

/// exp(-i H t) psi0 via eigendecomposition. H must be Hermitian to 1e-10.
Vector evolve(const Matrix& hamiltonian, double t, const Vector& psi0);

/// exp(+i A) for Hermitian A.
Matrix exp_i_hermitian(const Matrix& a);

struct SqrtIswapPulse {
  double duration = 0.0;
  Matrix achieved_gate;  // 4x4 on {b,a} x {0,1}
};

/// Pulse duration solving |g omega / (2 Delta)| t = pi/4 and the gate it
/// realizes. The drive phase is chosen so the evolution matches the +i
/// phase convention of the square-root-of-ISWAP (the same sign the full
/// model produces after elimination).
SqrtIswapPulse sqrt_iswap_pulse(const CavityModel& model);

enum class HamiltonianLevel { kFull, kAdiabatic };

struct SelectivityResult {
  double infidelity = 0.0;
  double leakage = 0.0;  // population above Fock level n_max - 1
};

/// Evolves the chosen Hamiltonian for the pulse duration on the logical
/// {|a,0>, |b,1>} subspace and returns 1 minus the subspace-average gate
/// fidelity F = (|tr(U_ideal^dag P U P)|^2 + d) / (d^2 + d), d = 2, against
/// the ideal pulse gate. Requires n_max >= 3 (room to detect leakage).
SelectivityResult selectivity_error(const CavityModel& model,
                                    HamiltonianLevel level);

struct SweepRow {
  double delta_over_g = 0.0;
  double omega_over_g = 0.0;
  int n_max = 0;
  std::string level;
  double infidelity = 0.0;
  double leakage = 0.0;
};

/// Selectivity ladder over detunings for both Hamiltonian levels, in units
/// of g with the resonant drive detuning.
std::vector<SweepRow> selectivity_sweep(const std::vector<double>& deltas_over_g,
                                        double omega_over_g, int n_max);

/// Two-mode polarization model: independent Raman branches through two
/// cavity modes. Atomic levels a = 0, b = 1, a' = 2, b' = 3; cavity states
/// vacuum = 0, one photon in mode a = 1, one photon in mode b = 2; joint
/// index atom * 3 + cavity (dimension 12).
struct PolarizationModel {
  double g_a = 1.0, g_b = 1.0;
  double omega_a = 1.0, omega_b = 1.0;
  double delta_a = 100.0, delta_b = 100.0;
  int n_max = 1;

  double branch_ratio_a() const;  // |delta_a| / max couplings of branch a
  double branch_ratio_b() const;
  void validate() const;  // throws on zero detunings
};

/// The two-branch selective coupling k_a |a',0><a,1_a| + k_b |b',0><b,1_b|
/// + h.c. with k_x = g_x omega_x / (2 delta_x).
Matrix polarization_selective_hamiltonian(const PolarizationModel& model);

/// Evolution for time t under the selective coupling in the +i drive-phase
/// convention; at k t = pi/2 (per branch) it equals polarization_pulse().
Matrix polarization_selective_unitary(const PolarizationModel& model, double t);

/// The ideal reinitialization pulse exp[i pi (|a',0><a,1_a| + |b',0><b,1_b|
/// + h.c.) / 2], independent of the branch rates.
Matrix polarization_pulse();

/// Variant with only the a-branch driven (omega_b = 0).
Matrix polarization_pulse_branch_a();

/// Three-step composition pulse^-1 * exp[i pi (|a'><b'| + |b'><a'|)/4] *
/// pulse; restricted to the {a, b} x {1_a, 1_b} logical subspace it equals
/// the square-root-of-ISWAP.
Matrix polarization_sqrt_iswap();

/// Logical 4x4 block of a 12-dim operator in the basis {(b,1_a), (b,1_b),
/// (a,1_a), (a,1_b)} (photonic qubit: 1_a = 0, 1_b = 1).
Matrix polarization_logical_block(const Matrix& op);

/// Decouples the atom from alpha |a>|psi_a> + beta |b>|psi_b| (k emitted
/// photonic qubits, cavity in vacuum): level relabel, a-branch pulse, map
/// a -> b, full pulse. Returns the (k+1)-qubit photonic state
/// alpha |psi_a>|0> + beta |psi_b>|1> with the atom left in |b>; the final
/// atom purity is reported through atom_purity when given.
PureState polarization_decoupling(const Vector& atom_photon_state, Complex alpha,
                                  Complex beta, double* atom_purity = nullptr);

}  // namespace seqmps
