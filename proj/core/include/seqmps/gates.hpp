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

#include "seqmps/types.hpp"

namespace seqmps {

// Two-qubit gates in the computational basis |00>, |01>, |10>, |11>
// (first qubit slowest).
Matrix iswap_gate();
Matrix sqrt_iswap_gate();  // exp[i pi (|01><10| + |10><01|) / 4]
Matrix swap_gate();
Matrix cz_gate();
Matrix cnot_gate();  // control on the first qubit

// Single-qubit gates.
Matrix hadamard_gate();
Matrix rz_gate(double phi);  // exp(-i sigma_z phi / 2)

struct TwoQubitGate {
  std::string name;
  Matrix matrix;  // 4x4 (2x2 for the local gates)
};

/// Gate by name: ISWAP, SQRT_ISWAP, SWAP, CZ, CNOT, HADAMARD, RZ (angle in
/// radians, RZ only). Throws on unknown names.
TwoQubitGate gate(const std::string& name, double angle = 0.0);

enum class DecompositionId {
  kCzForm,    // ISWAP = i SWAP CZ [Rz(pi/2) (x) Rz(pi/2)]
  kCnotForm,  // ISWAP = i SWAP [Rz(pi/2) (x) Rz(pi/2)] [1 (x) H] CNOT [1 (x) H]
};

/// Max elementwise deviation between ISWAP and the decomposition.
double verify_decomposition(DecompositionId id);

}  // namespace seqmps
