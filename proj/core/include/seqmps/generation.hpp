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

#include <optional>
#include <string>
#include <vector>

#include "seqmps/plan.hpp"
#include "seqmps/pure_state.hpp"

namespace seqmps {

/// Ancilla plus emitted-qubit register. The amplitude index has the ancilla
/// level slowest, then sites in emission order (site 1 slowest among sites).
struct JointState {
  int ancilla_dim = 0;
  int n_emitted = 0;
  Vector amplitudes;

  JointState(int ancilla_dim, int n_emitted, Vector amps);
};

struct PlanRunResult {
  PureState qubits = PureState::basis_state(1, 0);  // projection onto ancilla_out
  Vector ancilla_out;   // dominant ancilla vector, phase-aligned to phi_F
  bool decoupled = false;
  double purity = 0.0;
  double phi_f_overlap = 0.0;  // |<phi_F|ancilla_out>|^2
  Vector joint;                // full ancilla (x) qubits amplitudes
};

/// Applies the plan's isometries in sequence, growing the register by one
/// qubit per step, and reduces out the ancilla. With validate_steps the
/// isometry condition is enforced (1e-10) before running.
PlanRunResult run_plan(const GenerationPlan& plan, bool validate_steps = true);

struct StandardMapResult {
  PureState qubits = PureState::basis_state(1, 0);
  bool decoupled = false;
  double purity = 0.0;
  Vector atom_out;  // dominant 2D atom vector
  Vector joint;     // atom (2D, index alpha*2+tag) (x) qubits
};

/// Restricted-interaction scenario: per step a 2D x 2D atomic unitary acts
/// on (effective ancilla, tag) with the tag entering in |0>, then the fixed
/// emission map swaps the tag with a fresh time-bin qubit. The tag is
/// asserted to return to |0> after each step (it must; a violation throws).
StandardMapResult run_standard_map(int D,
                                   const std::vector<Matrix>& atomic_unitaries,
                                   const Vector& phi_I);

/// The 2D x D isometries the standard map realizes: for each atomic unitary
/// U, V[(alpha*2 + b), beta] = U[(alpha*2 + b), (beta*2 + 0)].
std::vector<Isometry> induced_isometries(int D,
                                         const std::vector<Matrix>& atomic_unitaries);

struct GateOp {
  int site_a = 0;
  int site_b = 0;
  Matrix unitary;  // 4x4, index (x_a * 2 + x_b)
  std::string label;
};

/// One sequential pass of two-qubit gates. For nearest-neighbor chains the
/// pairs run (1,2), (2,3), ..., (n-1,n); a leading (n,1) gate is permitted
/// on layers after the first.
struct GateLayer {
  std::vector<GateOp> gates;
};

/// Applies the layers in order to a dense n-qubit register.
PureState run_qubit_chain(int n, const std::vector<GateLayer>& layers,
                          const PureState& initial);

/// Ancilla form of a single nearest-neighbor layer on |0...0>: gate k acts
/// on (qubit k, ancilla) followed by SWAP(ancilla, qubit k+1). The ancilla
/// ends in |0> and is projected out.
PureState run_chain_via_ancilla(int n, const std::vector<Matrix>& gates);

struct MeasurementResult {
  double probability = 0.0;
  std::optional<PureState> post_state;  // empty for zero-probability outcomes
};

/// Projective measurement of a 2-level ancilla in the given orthonormal
/// basis. Outcome probabilities over both outcomes sum to 1.
MeasurementResult measure_ancilla(const JointState& joint, const Vector& basis0,
                                  const Vector& basis1, int outcome);

// Dense gate application helpers (artifact site ordering, 1-based sites).
void apply_single_qubit_gate_inplace(Vector& amps, int n, int site,
                                     const Matrix& u);
void apply_two_qubit_gate_inplace(Vector& amps, int n, int site_a, int site_b,
                                  const Matrix& u);
PureState apply_two_qubit_gate(const PureState& state, int site_a, int site_b,
                               const Matrix& u);

}  // namespace seqmps
