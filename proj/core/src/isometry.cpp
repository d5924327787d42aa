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

#include "seqmps/isometry.hpp"

#include <stdexcept>

namespace seqmps {

Matrix Isometry::block(int i) const {
  if (matrix.rows() % 2 != 0)
    throw std::logic_error("isometry row count is not 2 * ancilla dim");
  long d_out = matrix.rows() / 2;
  Matrix b(d_out, matrix.cols());
  for (long a = 0; a < d_out; ++a) b.row(a) = matrix.row(a * 2 + i);
  return b;
}

Matrix gram_schmidt_completion(const Matrix& cols, long target_cols) {
  long rows = cols.rows();
  if (target_cols > rows)
    throw std::invalid_argument("cannot complete beyond the row dimension");
  if (target_cols < cols.cols())
    throw std::invalid_argument("target has fewer columns than the input");

  Matrix out(rows, target_cols);
  out.leftCols(cols.cols()) = cols;
  long have = cols.cols();
  for (long cand = 0; cand < rows && have < target_cols; ++cand) {
    Vector v = Vector::Zero(rows);
    v(cand) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (long j = 0; j < have; ++j)
        v -= out.col(j).dot(v) * out.col(j);
    double nrm = v.norm();
    if (nrm < 1e-8) continue;  // candidate lies in the current span
    out.col(have++) = v / nrm;
  }
  if (have < target_cols)
    throw std::runtime_error("orthonormal completion failed (rank deficit)");
  return out;
}

Isometry embed_isometry(const Isometry& v, int D) {
  if (v.rows() > 2l * D || v.cols() > D)
    throw std::invalid_argument("isometry does not fit into 2D x D");
  if (!v.is_isometric(1e-10))
    throw std::invalid_argument("embed_isometry: input is not isometric");
  Matrix padded = Matrix::Zero(2l * D, v.cols());
  padded.topRows(v.rows()) = v.matrix;
  Isometry out;
  out.matrix = gram_schmidt_completion(padded, D);
  out.step_index = v.step_index;
  return out;
}

}  // namespace seqmps
