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

#include <array>
#include <vector>

#include "seqmps/pure_state.hpp"
#include "seqmps/types.hpp"

namespace seqmps {

/// Bond dimensions r_0 ... r_n of an open-boundary MPS.
struct BondProfile {
  std::vector<int> dims;

  int max() const;
  /// r_k <= min(2^k, 2^(n-k)) at every bond (the exact-representation bound
  /// for an n-qubit state).
  bool within_exact_bound() const;
};

/// Open-boundary matrix-product state over qubits.
///
/// Site tensor A^i_[k] (physical index i in {0,1}) is an r_k x r_{k-1}
/// matrix mapping bond k-1 to bond k; the amplitude of |i_1 ... i_n| is
/// phi_F^dag A^{i_n}_[n] ... A^{i_1}_[1] phi_I. Site tensors are arbitrary
/// maps: no normalization or isometry is implied by the type.
class MatrixProductState {
 public:
  using SiteTensor = std::array<Matrix, 2>;

  MatrixProductState(std::vector<SiteTensor> site_tensors, Vector phi_I,
                     Vector phi_F);

  int n_sites() const { return static_cast<int>(tensors_.size()); }
  const SiteTensor& site(int k) const { return tensors_[k - 1]; }  // 1-based
  const std::vector<SiteTensor>& site_tensors() const { return tensors_; }
  const Vector& phi_I() const { return phi_I_; }
  const Vector& phi_F() const { return phi_F_; }

  BondProfile bond_profile() const;
  int max_bond_dim() const { return bond_profile().max(); }

 private:
  std::vector<SiteTensor> tensors_;
  Vector phi_I_, phi_F_;
};

struct DenseConversion {
  PureState state;
  double raw_norm;  // contraction norm before normalization
};

/// Contracts the MPS to a dense state, normalizing and reporting the raw
/// norm. Throws if the contraction has (numerically) zero norm.
DenseConversion mps_to_dense(const MatrixProductState& mps);

/// Exact or truncated MPS factorization of a dense state by a sequential
/// SVD sweep from site 1 to site n. Singular values <= tol * sigma_max are
/// discarded at each cut. The returned tensors are in left-canonical form:
/// sum_i A^i_[k] A^i_[k]^dag = 1 on bond k, with the SVD phase gauge fixed
/// so the first significant entry of each left-singular vector is real
/// positive. Roundtrips exactly (including global phase) at tol = 0.
MatrixProductState mps_from_dense(const PureState& state, double tol);

/// Inserts X * X^{-1} on the given bond (1 <= bond <= n-1): site bond+1
/// absorbs X on its columns, site bond absorbs X^{-1} on its rows. The
/// represented state is unchanged.
MatrixProductState gauge_transformed(const MatrixProductState& mps, int bond,
                                     const Matrix& x);

}  // namespace seqmps
