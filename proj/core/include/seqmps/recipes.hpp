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

#include <utility>
#include <vector>

#include "seqmps/generation.hpp"
#include "seqmps/mps.hpp"
#include "seqmps/plan.hpp"
#include "seqmps/pure_state.hpp"

namespace seqmps {

/// Angle parameterization of the W-type target family: n-1 mixing angles
/// and n-1 phases for an n-qubit state.
struct WParams {
  std::vector<double> thetas;
  std::vector<double> phis;

  int n_sites() const { return static_cast<int>(thetas.size()) + 1; }
  /// All single-excitation amplitudes equal to 1/sqrt(n).
  static WParams uniform(int n);
};

/// W-type target: reading the closed form in artifact order, site n carries
/// e^{i Phi_1} sin Theta_1, site n-1 carries cos Theta_1 e^{i Phi_2} sin
/// Theta_2, ..., site 1 carries the full cosine product. Normalized by
/// construction.
PureState target_w_state(const WParams& params);

/// Photon-source cascade parameters: per-step vacuum amplitude c_k (real,
/// >= 0) and emission amplitude s_k (complex), |c|^2 + |s|^2 = 1. The last
/// step is always (c, s) = (0, 1), which forces emission and decouples the
/// source.
struct CascadeAngles {
  std::vector<double> c;   // length n-1
  std::vector<Complex> s;  // length n-1
  Complex phase;           // residual global phase, absorbed into phi_F
};

/// Solves the telescoped cascade equations so the source emits exactly the
/// given single-excitation amplitudes (entry k = amplitude of site k).
CascadeAngles telescope_cascade(const Vector& site_amplitudes);

/// Plan of photon-source isometries c|0>|a><a| + s|1>|b><a| + |0>|b><b|
/// from raw cascade angles (lists of length n-1; the final step is (0,1)).
/// Ancilla levels: a = 0, b = 1.
GenerationPlan w_cascade_plan(const std::vector<double>& c,
                              const std::vector<Complex>& s,
                              Complex final_phase = Complex(1.0, 0.0));

/// Source plan generating target_w_state(params) exactly: the cascade
/// angles are obtained by telescoping the target amplitudes.
GenerationPlan w_source_plan(const WParams& params);

/// The same source matrices as an MPS (full length-n angle lists, last step
/// conventionally (0,1)); bond dimension 2 throughout.
MatrixProductState w_source_mps(const std::vector<double>& c,
                                const std::vector<Complex>& s);

/// Angles for the three-level emission recipe that reproduce
/// target_w_state(target) up to a global phase (the emission order runs
/// opposite to the target's printed pattern, so the lists are re-telescoped).
WParams w_params_for_adiabatic(const WParams& target);

enum class AtomicLevel { kA = 0, kB1 = 1, kB2 = 2 };
enum class RecipeKind { kW, kGhz, kCluster };

/// The three-level rotation cos T (|k><k| + |l><l|) + e^{i P} sin T |k><l|
/// - e^{-i P} sin T |l><k| + |m><m|, with {k, l, m} a permutation of the
/// atomic levels.
Matrix rotation_u(AtomicLevel k, AtomicLevel l, AtomicLevel m, double phi,
                  double theta);

/// Photon emission a -> b1 with a photon, b1 and b2 unchanged; 6x3 isometry
/// with rows (level * 2 + photon bit).
Matrix emission_map();

/// Three-level atom recipe: initial level, one atomic unitary per step, and
/// the fixed emission map applied after each unitary.
struct AtomicRecipe {
  AtomicLevel initial = AtomicLevel::kA;
  std::vector<Matrix> unitaries;  // 3x3 each
  Matrix emission;                // 6x3
};

/// Level sequences for photonic W / GHZ / cluster generation by adiabatic
/// passage. Parameter lengths: W needs n-1 angle pairs, GHZ needs 1,
/// cluster needs n. n >= 2.
AtomicRecipe adiabatic_recipe(RecipeKind kind, int n,
                              const std::vector<double>& thetas,
                              const std::vector<double>& phis);

struct AtomicRunResult {
  PureState photons = PureState::basis_state(1, 0);
  Vector atom_out;  // dominant 3-level atom vector
  bool decoupled = false;
  double purity = 0.0;
};

/// Executes unitary-then-emission per step and reduces out the atom.
AtomicRunResult run_adiabatic_recipe(const AtomicRecipe& recipe);

/// Product-form cluster family (lengths n): each site factor conditions on
/// its left neighbor; theta = pi/4, phi = 0 gives the standard 1-D cluster
/// state in this sign convention.
PureState cluster_state(int n, const std::vector<double>& thetas,
                        const std::vector<double>& phis);

/// Stabilizer signs of cluster_state(n, pi/4, 0) in this convention:
/// -Z_{i-1} X_i Z_{i+1} for i < n (Z_0 = 1) and +Z_{n-1} X_n have
/// expectation +1. Returns the sign for generator i (1-based).
double cluster_stabilizer_sign(int i, int n);

/// Cavity-mediated cluster generation: register (cavity, atom 1..n), ISWAP
/// between the cavity and each atom in turn, with the deferred local
/// corrections applied on the atoms at the end. The cavity starts in
/// (|0> + |1>)/sqrt(2), atoms 1..n-1 likewise, atom n in |0> (its vertex
/// would otherwise stay behind in the cavity).
struct AtomicClusterSequence {
  PureState initial;  // n+1 qubits, site 1 = cavity
  GateLayer iswaps;   // (1, k+1) pairs
  std::vector<std::pair<int, Matrix>> compensation;  // (site, 2x2 unitary)
};
AtomicClusterSequence atomic_cluster_sequence(int n);

/// Runs the sequence and projects out the decoupled cavity. Omitting the
/// compensation shows the deferred corrections are not optional.
PureState run_atomic_cluster(const AtomicClusterSequence& seq,
                             bool with_compensation = true);

/// Direct atom-atom GHZ: first atom in (|a> + |b>)/sqrt(2), CNOT then SWAP
/// down the chain; the output is exactly the n-qubit GHZ state.
struct AtomicGhzSequence {
  PureState initial;
  GateLayer gates;
};
AtomicGhzSequence atomic_ghz_sequence(int n);
PureState run_atomic_ghz(const AtomicGhzSequence& seq);

/// (|0...0> + |1...1>) / sqrt(2).
PureState ghz_state(int n);

/// Cavity-ancilla W cascade: cavity qubit starts |0>, n-1 atoms start |a>,
/// and the |a,0> <-> |b,1> rotator (the physical square-root-of-ISWAP in
/// the a = 0, b = 1 encoding) is applied between the cavity and each atom.
/// The returned joint state is still entangled with the cavity.
JointState atomic_w_cascade(int n);

}  // namespace seqmps
