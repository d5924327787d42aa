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

#include "seqmps/types.hpp"

namespace seqmps {

/// Normalized amplitude vector over an ordered register of qudits.
///
/// Index convention: site 1 is the first-generated qudit and the
/// slowest-varying (leftmost) index of the amplitude array. For a qubit
/// register the bit of site k inside amplitude index I is (I >> (n-k)) & 1.
class PureState {
 public:
  /// Qubit register from amplitudes. Throws if the norm deviates from 1
  /// by more than kNormTol (zero vectors are always rejected).
  PureState(int n_sites, Vector amplitudes);

  /// General qudit register.
  PureState(std::vector<int> local_dims, Vector amplitudes);

  /// Normalizes explicitly, recording the raw norm. Zero vectors rejected.
  static PureState normalized(std::vector<int> local_dims, Vector amplitudes,
                              double* raw_norm = nullptr);
  static PureState normalized(int n_sites, Vector amplitudes,
                              double* raw_norm = nullptr);

  /// |index> on n qubits (index in the artifact ordering above).
  static PureState basis_state(int n_sites, long index);

  int n_sites() const { return n_sites_; }
  const std::vector<int>& local_dims() const { return local_dims_; }
  long dim() const { return amps_.size(); }
  const Vector& amplitudes() const { return amps_; }
  Complex amplitude(long index) const { return amps_(index); }
  bool is_qubit_register() const;

 private:
  PureState() = default;
  void check_shape() const;

  int n_sites_ = 0;
  std::vector<int> local_dims_;
  Vector amps_;
};

/// |<a|b>|^2; global-phase invariant. Throws on register shape mismatch.
double fidelity(const PureState& a, const PureState& b);

/// Number of singular values above tol * sigma_max across the bipartition
/// sites 1..cut | cut+1..n. Requires 0 < cut < n.
int schmidt_rank_at_cut(const PureState& state, int cut, double tol);

/// Singular values of the cut-reshaped amplitude matrix, descending.
RealVector schmidt_coefficients(const PureState& state, int cut);

/// <psi| P |psi> for a Pauli string given as (site, 'X'|'Y'|'Z') pairs,
/// identity elsewhere. Qubit registers only.
Complex pauli_expectation(const PureState& state,
                          const std::vector<std::pair<int, char>>& ops);

}  // namespace seqmps
