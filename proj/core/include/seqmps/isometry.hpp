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

#include "seqmps/types.hpp"

namespace seqmps {

/// One generation step: a rows x cols matrix with orthonormal columns.
///
/// For an embedded 2D x D step the rows are indexed (ancilla_out, qubit)
/// with the qubit fastest: row = ancilla_out * 2 + i. Columns are indexed
/// by the incoming ancilla level.
struct Isometry {
  Matrix matrix;
  int step_index = 0;  // site this step generates (1-based)

  long rows() const { return matrix.rows(); }
  long cols() const { return matrix.cols(); }
  /// Max-abs deviation of W^dag W from the identity.
  double residual() const { return isometry_residual(matrix); }
  bool is_isometric(double tol = kIsometryTol) const {
    return rows() >= cols() && residual() <= tol;
  }
  /// Physical-index block: the D x D (or b x a) matrix V^i.
  Matrix block(int i) const;
};

/// Appends orthonormal columns to `cols` until it has `target_cols` of them,
/// drawing completion candidates from canonical basis vectors in index
/// order (modified Gram-Schmidt with a re-orthogonalization pass). The
/// input columns are copied through unchanged.
Matrix gram_schmidt_completion(const Matrix& cols, long target_cols);

/// Embeds an r x c isometry into a 2D x D isometry: the top-left r x c
/// block is v, added columns are orthonormal completions. Acting on
/// ancilla states supported on the first c levels reproduces v exactly.
Isometry embed_isometry(const Isometry& v, int D);

}  // namespace seqmps
