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

#include "seqmps/mps.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <stdexcept>

namespace seqmps {

int BondProfile::max() const {
  return *std::max_element(dims.begin(), dims.end());
}

bool BondProfile::within_exact_bound() const {
  int n = static_cast<int>(dims.size()) - 1;
  for (int k = 0; k <= n; ++k) {
    double bound = std::min(std::pow(2.0, k), std::pow(2.0, n - k));
    if (dims[k] > bound) return false;
  }
  return true;
}

MatrixProductState::MatrixProductState(std::vector<SiteTensor> site_tensors,
                                       Vector phi_I, Vector phi_F)
    : tensors_(std::move(site_tensors)),
      phi_I_(std::move(phi_I)),
      phi_F_(std::move(phi_F)) {
  if (tensors_.empty()) throw std::invalid_argument("MPS needs >= 1 site");
  for (size_t k = 0; k < tensors_.size(); ++k) {
    const auto& t = tensors_[k];
    if (t[0].rows() != t[1].rows() || t[0].cols() != t[1].cols())
      throw std::invalid_argument("site tensor blocks have unequal shapes");
    if (t[0].rows() < 1 || t[0].cols() < 1)
      throw std::invalid_argument("site tensor has empty dimension");
    if (k > 0 && t[0].cols() != tensors_[k - 1][0].rows())
      throw std::invalid_argument(
          "adjacent bond dimensions are inconsistent at site " +
          std::to_string(k + 1));
  }
  if (phi_I_.size() != tensors_.front()[0].cols())
    throw std::invalid_argument("phi_I length does not match bond 0");
  if (phi_F_.size() != tensors_.back()[0].rows())
    throw std::invalid_argument("phi_F length does not match bond n");
}

BondProfile MatrixProductState::bond_profile() const {
  BondProfile p;
  p.dims.push_back(static_cast<int>(tensors_.front()[0].cols()));
  for (const auto& t : tensors_) p.dims.push_back(static_cast<int>(t[0].rows()));
  return p;
}

DenseConversion mps_to_dense(const MatrixProductState& mps) {
  int n = mps.n_sites();
  // Joint vector over (bond_k, sites 1..k); bond index slowest, newest site
  // fastest, so the final site block is already in artifact order.
  Vector joint = mps.phi_I();
  long emitted = 1;
  for (int k = 1; k <= n; ++k) {
    const auto& t = mps.site(k);
    long rk = t[0].rows(), rkm1 = t[0].cols();
    Vector next = Vector::Zero(rk * emitted * 2);
    for (long q = 0; q < emitted; ++q)
      for (int i = 0; i < 2; ++i)
        for (long a = 0; a < rk; ++a) {
          Complex acc = 0.0;
          for (long b = 0; b < rkm1; ++b) acc += t[i](a, b) * joint(b * emitted + q);
          next(a * emitted * 2 + q * 2 + i) += acc;
        }
    joint.swap(next);
    emitted *= 2;
  }
  Vector amps = Vector::Zero(emitted);
  const Vector& f = mps.phi_F();
  for (long a = 0; a < f.size(); ++a)
    amps += std::conj(f(a)) * joint.segment(a * emitted, emitted);
  double raw = amps.norm();
  if (raw < 1e-300)
    throw std::runtime_error("MPS contracts to the zero vector");
  return DenseConversion{PureState(n, amps / raw), raw};
}

namespace {

// Makes the first significant entry of each column real positive and
// returns the compensating phases to fold into the remaining factor.
Vector fix_column_phases(Matrix& u) {
  Vector phases = Vector::Ones(u.cols());
  for (long j = 0; j < u.cols(); ++j) {
    double colmax = u.col(j).cwiseAbs().maxCoeff();
    if (colmax == 0.0) continue;
    for (long r = 0; r < u.rows(); ++r) {
      if (std::abs(u(r, j)) >= 1e-8 * colmax) {
        Complex ph = u(r, j) / std::abs(u(r, j));
        u.col(j) *= std::conj(ph);
        phases(j) = ph;
        break;
      }
    }
  }
  return phases;
}

}  // namespace

MatrixProductState mps_from_dense(const PureState& state, double tol) {
  if (tol < 0) throw std::invalid_argument("tol must be >= 0");
  if (!state.is_qubit_register())
    throw std::invalid_argument("mps_from_dense: qubit registers only");
  int n = state.n_sites();

  std::vector<MatrixProductState::SiteTensor> tensors;
  tensors.reserve(n);

  // Remainder T: r_{k-1} x 2^{n-k+1}, starting as the full amplitude row.
  Matrix t(1, state.dim());
  for (long c = 0; c < state.dim(); ++c) t(0, c) = state.amplitude(c);

  for (int k = 1; k <= n; ++k) {
    long r_prev = t.rows();
    long half = t.cols() / 2;
    Matrix m(r_prev * 2, half);
    for (long a = 0; a < r_prev; ++a)
      for (int i = 0; i < 2; ++i) m.row(a * 2 + i) = t.row(a).segment(i * half, half);

    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    long rank = 0;
    for (long i = 0; i < sv.size(); ++i)
      if (sv(i) > tol * smax && sv(i) > 0.0) ++rank;
    rank = std::max<long>(rank, 1);

    Matrix u = svd.matrixU().leftCols(rank);
    Vector phases = fix_column_phases(u);

    MatrixProductState::SiteTensor site{Matrix(rank, r_prev), Matrix(rank, r_prev)};
    for (int i = 0; i < 2; ++i)
      for (long a = 0; a < rank; ++a)
        for (long b = 0; b < r_prev; ++b) site[i](a, b) = u(b * 2 + i, a);
    tensors.push_back(std::move(site));

    Matrix next(rank, half);
    for (long a = 0; a < rank; ++a)
      next.row(a) = phases(a) * sv(a) * svd.matrixV().col(a).adjoint();
    t.swap(next);
  }

  Vector phi_I = Vector::Ones(1);
  Vector phi_F(1);
  phi_F(0) = std::conj(t(0, 0));  // residual norm * phase of the sweep
  return MatrixProductState(std::move(tensors), std::move(phi_I),
                            std::move(phi_F));
}

MatrixProductState gauge_transformed(const MatrixProductState& mps, int bond,
                                     const Matrix& x) {
  int n = mps.n_sites();
  if (bond < 1 || bond >= n)
    throw std::invalid_argument("gauge bond must satisfy 1 <= bond <= n-1");
  long rb = mps.site(bond)[0].rows();
  if (x.rows() != rb || x.cols() != rb)
    throw std::invalid_argument("gauge matrix has wrong shape");
  Eigen::PartialPivLU<Matrix> lu(x);
  if (std::abs(lu.determinant()) < 1e-12)
    throw std::invalid_argument("gauge matrix is singular");
  Matrix xinv = lu.inverse();

  auto tensors = mps.site_tensors();
  for (int i = 0; i < 2; ++i) {
    tensors[bond][i] = tensors[bond][i] * x;          // site bond+1 columns
    tensors[bond - 1][i] = xinv * tensors[bond - 1][i];  // site bond rows
  }
  return MatrixProductState(std::move(tensors), mps.phi_I(), mps.phi_F());
}

}  // namespace seqmps
