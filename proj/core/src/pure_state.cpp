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

#include "seqmps/pure_state.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <stdexcept>

namespace seqmps {

namespace {
long product(const std::vector<int>& dims) {
  long p = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("local dimension must be >= 1");
    p *= d;
  }
  return p;
}
}  // namespace

PureState::PureState(int n_sites, Vector amplitudes)
    : PureState(std::vector<int>(static_cast<size_t>(n_sites), 2),
                std::move(amplitudes)) {}

PureState::PureState(std::vector<int> local_dims, Vector amplitudes) {
  n_sites_ = static_cast<int>(local_dims.size());
  local_dims_ = std::move(local_dims);
  amps_ = std::move(amplitudes);
  check_shape();
  double nrm = amps_.norm();
  if (nrm == 0.0) throw std::invalid_argument("zero amplitude vector");
  if (std::abs(nrm - 1.0) > kNormTol)
    throw std::invalid_argument("state is not normalized (norm deviates by " +
                                std::to_string(std::abs(nrm - 1.0)) + ")");
}

void PureState::check_shape() const {
  if (n_sites_ < 1) throw std::invalid_argument("register needs >= 1 site");
  if (amps_.size() != product(local_dims_))
    throw std::invalid_argument("amplitude length does not match register");
}

PureState PureState::normalized(std::vector<int> local_dims, Vector amplitudes,
                                double* raw_norm) {
  double nrm = amplitudes.norm();
  if (nrm == 0.0) throw std::invalid_argument("zero amplitude vector");
  if (raw_norm) *raw_norm = nrm;
  return PureState(std::move(local_dims), amplitudes / nrm);
}

PureState PureState::normalized(int n_sites, Vector amplitudes,
                                double* raw_norm) {
  return normalized(std::vector<int>(static_cast<size_t>(n_sites), 2),
                    std::move(amplitudes), raw_norm);
}

PureState PureState::basis_state(int n_sites, long index) {
  Vector v = Vector::Zero(1l << n_sites);
  v(index) = 1.0;
  return PureState(n_sites, std::move(v));
}

bool PureState::is_qubit_register() const {
  return std::all_of(local_dims_.begin(), local_dims_.end(),
                     [](int d) { return d == 2; });
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.local_dims() != b.local_dims())
    throw std::invalid_argument("fidelity: register shapes differ");
  Complex overlap = a.amplitudes().dot(b.amplitudes());
  return std::norm(overlap);
}

RealVector schmidt_coefficients(const PureState& state, int cut) {
  if (cut <= 0 || cut >= state.n_sites())
    throw std::invalid_argument("cut must satisfy 0 < cut < n");
  long rows = 1, cols = 1;
  for (int k = 0; k < state.n_sites(); ++k) {
    if (k < cut)
      rows *= state.local_dims()[k];
    else
      cols *= state.local_dims()[k];
  }
  // row index = sites 1..cut (slow block of the amplitude index)
  Eigen::Map<const Matrix> m(state.amplitudes().data(), cols, rows);
  Eigen::JacobiSVD<Matrix> svd(m.transpose());
  return svd.singularValues();
}

int schmidt_rank_at_cut(const PureState& state, int cut, double tol) {
  if (tol < 0) throw std::invalid_argument("tol must be >= 0");
  RealVector sv = schmidt_coefficients(state, cut);
  double smax = sv.size() ? sv(0) : 0.0;
  int rank = 0;
  for (long i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * smax && sv(i) > 0.0) ++rank;
  return rank;
}

Complex pauli_expectation(const PureState& state,
                          const std::vector<std::pair<int, char>>& ops) {
  if (!state.is_qubit_register())
    throw std::invalid_argument("pauli_expectation: qubit registers only");
  int n = state.n_sites();
  Vector v = state.amplitudes();
  for (auto [site, p] : ops) {
    if (site < 1 || site > n) throw std::invalid_argument("site out of range");
    long stride = 1l << (n - site);
    Vector w = Vector::Zero(v.size());
    for (long idx = 0; idx < v.size(); ++idx) {
      long bit = (idx / stride) % 2;
      long flipped = bit ? idx - stride : idx + stride;
      switch (p) {
        case 'X': w(flipped) += v(idx); break;
        case 'Y': w(flipped) += (bit ? -kImag : kImag) * v(idx); break;
        case 'Z': w(idx) += (bit ? -1.0 : 1.0) * v(idx); break;
        default: throw std::invalid_argument("unknown Pauli label");
      }
    }
    v.swap(w);
  }
  return state.amplitudes().dot(v);
}

}  // namespace seqmps
