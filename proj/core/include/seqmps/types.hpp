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

#include <complex>

#include <Eigen/Dense>

namespace seqmps {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

// Default tolerances used across the library.
inline constexpr double kNormTol = 1e-12;       // state normalization
inline constexpr double kIsometryTol = 1e-12;   // W^dag W = 1 residual
inline constexpr double kDecouplingTol = 1e-10; // ancilla purity deficit
inline constexpr double kRankTol = 1e-12;       // relative singular value cutoff

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

// Residual of the isometry condition for a rows >= cols matrix.
inline double isometry_residual(const Matrix& w) {
  Matrix g = w.adjoint() * w;
  g -= Matrix::Identity(w.cols(), w.cols());
  return max_abs(g);
}

inline bool is_unitary(const Matrix& u, double tol) {
  return u.rows() == u.cols() && isometry_residual(u) <= tol;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace seqmps
