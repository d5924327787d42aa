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

#include "seqmps/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace seqmps {

Matrix iswap_gate() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(3, 3) = 1.0;
  u(1, 2) = u(2, 1) = kImag;
  return u;
}

Matrix sqrt_iswap_gate() {
  double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(3, 3) = 1.0;
  u(1, 1) = u(2, 2) = c;
  u(1, 2) = u(2, 1) = kImag * s;
  return u;
}

Matrix swap_gate() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(3, 3) = u(1, 2) = u(2, 1) = 1.0;
  return u;
}

Matrix cz_gate() {
  Matrix u = Matrix::Identity(4, 4);
  u(3, 3) = -1.0;
  return u;
}

Matrix cnot_gate() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = u(1, 1) = u(2, 3) = u(3, 2) = 1.0;
  return u;
}

Matrix hadamard_gate() {
  Matrix h(2, 2);
  double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return h;
}

Matrix rz_gate(double phi) {
  Matrix u = Matrix::Zero(2, 2);
  u(0, 0) = std::exp(-kImag * phi / 2.0);
  u(1, 1) = std::exp(kImag * phi / 2.0);
  return u;
}

TwoQubitGate gate(const std::string& name, double angle) {
  if (name == "ISWAP") return {name, iswap_gate()};
  if (name == "SQRT_ISWAP") return {name, sqrt_iswap_gate()};
  if (name == "SWAP") return {name, swap_gate()};
  if (name == "CZ") return {name, cz_gate()};
  if (name == "CNOT") return {name, cnot_gate()};
  if (name == "HADAMARD") return {name, hadamard_gate()};
  if (name == "RZ") return {name, rz_gate(angle)};
  throw std::invalid_argument("unknown gate name: " + name);
}

double verify_decomposition(DecompositionId id) {
  Matrix rzrz = kron(rz_gate(M_PI / 2), rz_gate(M_PI / 2));
  Matrix rhs;
  switch (id) {
    case DecompositionId::kCzForm:
      rhs = kImag * swap_gate() * cz_gate() * rzrz;
      break;
    case DecompositionId::kCnotForm: {
      Matrix ih = kron(Matrix::Identity(2, 2), hadamard_gate());
      rhs = kImag * swap_gate() * rzrz * ih * cnot_gate() * ih;
      break;
    }
    default:
      throw std::invalid_argument("unknown decomposition id");
  }
  return max_abs(iswap_gate() - rhs);
}

}  // namespace seqmps
