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

#include "seqmps/mps.hpp"
#include "seqmps/plan.hpp"
#include "seqmps/pure_state.hpp"

namespace seqmps {

struct CompileResult {
  GenerationPlan plan;
  /// Step matrices before the 2D x D embedding, in generation order.
  std::vector<Isometry> pre_embedding_steps;
  std::vector<std::pair<int, int>> pre_embedding_dims;  // (rows, cols)
  double input_norm = 1.0;  // contraction norm of the input MPS
};

/// Compiles an arbitrary open-boundary MPS into a deterministic generation
/// plan. Works backwards from the last site: the final boundary is absorbed
/// by an SVD split, each earlier site tensor is split against the remainder
/// of the previous split, numerically superfluous columns (singular values
/// <= tol * sigma_max) are truncated, and every resulting left factor is
/// embedded into a 2D x D isometry with D the input's maximal bond
/// dimension. phi_I becomes the remainder applied to the input boundary
/// vector, normalized; the ancilla deterministically ends in level 0.
CompileResult compile_plan(const MatrixProductState& mps,
                           double tol = kRankTol);

/// Pre-embedding step shapes for an n-site plan with ancilla dimension D:
/// step n-k has shape (2 * min(D, 2^k)) x min(D, 2^(k+1)). Indexed by step
/// (entry 0 = step 1).
std::vector<std::pair<int, int>> isometry_dims(int n, int D);

struct PlanVerification {
  double fidelity = 0.0;          // |<target|generated>|^2
  bool decoupled = false;         // ancilla purity >= 1 - kDecouplingTol
  double ancilla_purity = 0.0;
  double phi_f_overlap = 0.0;     // |<phi_F|ancilla_out>|^2
  double max_step_residual = 0.0;
};

/// Runs the plan and compares against the target state. Non-isometric steps
/// are reported through max_step_residual rather than thrown, so tampered
/// plans can be diagnosed.
PlanVerification verify_plan(const GenerationPlan& plan,
                             const PureState& target);

}  // namespace seqmps
