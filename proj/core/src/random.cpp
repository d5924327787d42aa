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

#include "seqmps/random.hpp"

#include <Eigen/QR>

namespace seqmps {

Matrix random_gaussian(long rows, long cols, Rng& rng) {
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) m(i, j) = rng.cgauss();
  return m;
}

Matrix random_unitary(long dim, Rng& rng) {
  Matrix g = random_gaussian(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (long j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix random_isometry(long rows, long cols, Rng& rng) {
  if (cols > rows) throw std::invalid_argument("random_isometry: cols > rows");
  return random_unitary(rows, rng).leftCols(cols);
}

PureState random_state(int n_sites, Rng& rng) {
  Vector v(1l << n_sites);
  for (long i = 0; i < v.size(); ++i) v(i) = rng.cgauss();
  return PureState::normalized(n_sites, std::move(v));
}

MatrixProductState random_mps(int n_sites, int bond_dim, Rng& rng) {
  double scale = 1.0 / std::sqrt(static_cast<double>(bond_dim));
  std::vector<MatrixProductState::SiteTensor> tensors;
  tensors.reserve(n_sites);
  for (int k = 0; k < n_sites; ++k)
    tensors.push_back({scale * random_gaussian(bond_dim, bond_dim, rng),
                       scale * random_gaussian(bond_dim, bond_dim, rng)});
  Vector phi_i(bond_dim), phi_f(bond_dim);
  for (long i = 0; i < bond_dim; ++i) {
    phi_i(i) = rng.cgauss();
    phi_f(i) = rng.cgauss();
  }
  return MatrixProductState(std::move(tensors), phi_i / phi_i.norm(),
                            phi_f / phi_f.norm());
}

Matrix random_invertible(long dim, Rng& rng) {
  Matrix u = random_unitary(dim, rng);
  Matrix v = random_unitary(dim, rng);
  Vector d(dim);
  for (long i = 0; i < dim; ++i) d(i) = 0.5 + 1.5 * rng.uniform();
  return u * d.asDiagonal() * v;
}

}  // namespace seqmps
