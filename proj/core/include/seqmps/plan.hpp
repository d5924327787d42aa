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

#include <vector>

#include "seqmps/isometry.hpp"
#include "seqmps/types.hpp"

namespace seqmps {

/// Deterministic sequential-generation plan: one 2D x D isometry per site,
/// applied to a D-level ancilla starting in phi_I. After the last step the
/// ancilla decouples in phi_F (up to phase) and the emitted register holds
/// the target state.
struct GenerationPlan {
  int ancilla_dim = 0;  // D
  std::vector<Isometry> steps;
  Vector phi_I;
  Vector phi_F;
  double declared_fidelity = 1.0;

  int n_sites() const { return static_cast<int>(steps.size()); }

  double max_step_residual() const {
    double r = 0.0;
    for (const auto& s : steps) r = std::max(r, s.residual());
    return r;
  }

  /// Throws if shapes are inconsistent or any step violates the isometry
  /// condition beyond tol.
  void validate(double tol = kIsometryTol) const;
};

}  // namespace seqmps
