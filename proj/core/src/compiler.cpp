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

#include "seqmps/compiler.hpp"

#include <Eigen/SVD>
#include <stdexcept>

#include "seqmps/generation.hpp"

namespace seqmps {

void GenerationPlan::validate(double tol) const {
  if (ancilla_dim < 1) throw std::invalid_argument("plan: ancilla_dim < 1");
  if (phi_I.size() != ancilla_dim || phi_F.size() != ancilla_dim)
    throw std::invalid_argument("plan: boundary vector length != D");
  for (const auto& s : steps) {
    if (s.rows() != 2l * ancilla_dim || s.cols() != ancilla_dim)
      throw std::invalid_argument("plan: step is not 2D x D");
    if (s.residual() > tol)
      throw std::invalid_argument("plan: step violates the isometry condition");
  }
}

namespace {

// Column-phase gauge: first significant entry of each left-singular vector
// real positive; compensating phases are folded into the remainder rows.
void fix_phases(Matrix& u, Matrix& remainder) {
  for (long j = 0; j < u.cols(); ++j) {
    double colmax = u.col(j).cwiseAbs().maxCoeff();
    if (colmax == 0.0) continue;
    for (long r = 0; r < u.rows(); ++r) {
      if (std::abs(u(r, j)) >= 1e-8 * colmax) {
        Complex ph = u(r, j) / std::abs(u(r, j));
        u.col(j) *= std::conj(ph);
        remainder.row(j) *= ph;
        break;
      }
    }
  }
}

}  // namespace

CompileResult compile_plan(const MatrixProductState& mps, double tol) {
  if (tol < 0) throw std::invalid_argument("tol must be >= 0");
  int n = mps.n_sites();
  int D = mps.max_bond_dim();

  // Backward pass. The running remainder M starts as the final boundary
  // bra and, at each site, the interleaved stack of M * A^i is split by
  // SVD into (left isometry) * (new remainder).
  Matrix m = mps.phi_F().adjoint();  // 1 x r_n
  double fid_estimate = 1.0;
  std::vector<Isometry> pre(n);

  for (int s = n; s >= 1; --s) {
    const auto& t = mps.site(s);
    long b = m.rows();  // active ancilla levels after this step
    Matrix lhs(2 * b, t[0].cols());
    for (int i = 0; i < 2; ++i) {
      Matrix mi = m * t[i];
      for (long a = 0; a < b; ++a) lhs.row(a * 2 + i) = mi.row(a);
    }

    Eigen::JacobiSVD<Matrix> svd(lhs, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const RealVector& sv = svd.singularValues();
    double smax = sv.size() ? sv(0) : 0.0;
    if (smax == 0.0)
      throw std::runtime_error("compile_plan: zero remainder at site " +
                               std::to_string(s));
    long rank = 0;
    double kept = 0.0, total = 0.0;
    for (long i = 0; i < sv.size(); ++i) {
      total += sv(i) * sv(i);
      if (sv(i) > tol * smax) {
        ++rank;
        kept += sv(i) * sv(i);
      }
    }
    rank = std::max<long>(rank, 1);
    if (rank > D)
      throw std::runtime_error("compile_plan: intermediate rank exceeds D");
    fid_estimate *= kept / total;

    Matrix u = svd.matrixU().leftCols(rank);
    Matrix rem(rank, lhs.cols());
    for (long a = 0; a < rank; ++a)
      rem.row(a) = sv(a) * svd.matrixV().col(a).adjoint();
    fix_phases(u, rem);

    pre[s - 1] = Isometry{std::move(u), s};
    m.swap(rem);
  }

  // m is now M_[1]; the plan starts from its action on the input boundary.
  Vector phi_active = m * mps.phi_I();
  double nrm = phi_active.norm();
  if (nrm < 1e-300)
    throw std::runtime_error(
        "compile_plan: boundary vector is annihilated (zero-norm state)");
  phi_active /= nrm;

  CompileResult out;
  out.pre_embedding_steps = pre;
  for (const auto& p : pre)
    out.pre_embedding_dims.emplace_back(static_cast<int>(p.rows()),
                                        static_cast<int>(p.cols()));
  out.input_norm = nrm;

  GenerationPlan& plan = out.plan;
  plan.ancilla_dim = D;
  plan.declared_fidelity = fid_estimate;
  plan.steps.reserve(n);
  for (const auto& p : pre) plan.steps.push_back(embed_isometry(p, D));
  plan.phi_I = Vector::Zero(D);
  plan.phi_I.head(phi_active.size()) = phi_active;
  plan.phi_F = Vector::Zero(D);
  plan.phi_F(0) = 1.0;  // the last left factor maps onto ancilla level 0
  return out;
}

std::vector<std::pair<int, int>> isometry_dims(int n, int D) {
  if (n < 1 || D < 1) throw std::invalid_argument("isometry_dims: n, D >= 1");
  std::vector<std::pair<int, int>> dims(n);
  for (int k = 0; k < n; ++k) {
    double p2k = std::pow(2.0, k);
    double p2k1 = std::pow(2.0, k + 1);
    int rows = 2 * static_cast<int>(std::min<double>(D, p2k));
    int cols = static_cast<int>(std::min<double>(D, p2k1));
    dims[n - 1 - k] = {rows, cols};  // step n-k
  }
  return dims;
}

PlanVerification verify_plan(const GenerationPlan& plan,
                             const PureState& target) {
  if (plan.n_sites() != target.n_sites())
    throw std::invalid_argument("verify_plan: site count mismatch");
  PlanVerification v;
  v.max_step_residual = plan.max_step_residual();
  PlanRunResult run = run_plan(plan, /*validate_steps=*/false);
  v.fidelity = fidelity(run.qubits, target);
  v.decoupled = run.decoupled;
  v.ancilla_purity = run.purity;
  v.phi_f_overlap = run.phi_f_overlap;
  return v;
}

}  // namespace seqmps
