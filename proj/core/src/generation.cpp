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

#include "seqmps/generation.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace seqmps {

JointState::JointState(int ancilla_dim_, int n_emitted_, Vector amps)
    : ancilla_dim(ancilla_dim_), n_emitted(n_emitted_), amplitudes(std::move(amps)) {
  if (ancilla_dim < 1) throw std::invalid_argument("ancilla_dim < 1");
  if (amplitudes.size() != ancilla_dim * (1l << n_emitted))
    throw std::invalid_argument("joint amplitude length mismatch");
  if (std::abs(amplitudes.norm() - 1.0) > kNormTol)
    throw std::invalid_argument("joint state is not normalized");
}

namespace {

struct Reduction {
  double purity = 0.0;
  Vector top;  // dominant eigenvector of the reduced ancilla state
};

// Reduced ancilla state of a joint vector [ancilla slow, register fast].
Reduction reduce_ancilla(const Vector& joint, long d, long reg) {
  Matrix rho = Matrix::Zero(d, d);
  for (long a = 0; a < d; ++a)
    for (long b = 0; b < d; ++b)
      rho(a, b) = joint.segment(b * reg, reg).dot(joint.segment(a * reg, reg));
  Reduction r;
  r.purity = (rho * rho).trace().real();
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  r.top = es.eigenvectors().col(d - 1);  // eigenvalues ascend
  return r;
}

void align_phase(Vector& v, const Vector& reference) {
  Complex ov = reference.dot(v);
  if (std::abs(ov) > 1e-6) {
    v *= std::conj(ov / std::abs(ov));
    return;
  }
  double vmax = v.cwiseAbs().maxCoeff();
  for (long i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= 1e-8 * vmax) {
      v *= std::conj(v(i) / std::abs(v(i)));
      return;
    }
  }
}

// Grows the register by one qubit: new[(a2, q, i)] = sum_a V[(a2*2+i), a] old[(a, q)].
Vector apply_step(const Vector& joint, long d_in, long d_out, long emitted,
                  const Matrix& v) {
  Vector next = Vector::Zero(d_out * emitted * 2);
  for (long a = 0; a < d_in; ++a)
    for (long q = 0; q < emitted; ++q) {
      Complex amp = joint(a * emitted + q);
      if (amp == Complex(0.0, 0.0)) continue;
      for (long a2 = 0; a2 < d_out; ++a2)
        for (int i = 0; i < 2; ++i)
          next(a2 * emitted * 2 + q * 2 + i) += v(a2 * 2 + i, a) * amp;
    }
  return next;
}

}  // namespace

PlanRunResult run_plan(const GenerationPlan& plan, bool validate_steps) {
  if (validate_steps) plan.validate(1e-10);
  long d = plan.ancilla_dim;
  int n = plan.n_sites();
  Vector joint = plan.phi_I;
  double phi_norm = joint.norm();
  if (phi_norm == 0.0) throw std::invalid_argument("run_plan: zero phi_I");
  joint /= phi_norm;
  long emitted = 1;
  for (const auto& s : plan.steps) {
    if (s.rows() != 2 * d || s.cols() != d)
      throw std::invalid_argument("run_plan: step shape mismatch");
    joint = apply_step(joint, d, d, emitted, s.matrix);
    emitted *= 2;
  }

  PlanRunResult out;
  out.joint = joint;
  Reduction red = reduce_ancilla(joint, d, emitted);
  out.purity = red.purity;
  out.decoupled = red.purity >= 1.0 - kDecouplingTol;
  align_phase(red.top, plan.phi_F);
  out.ancilla_out = red.top;
  out.phi_f_overlap = std::norm(plan.phi_F.dot(red.top));

  Vector qubit_amps = Vector::Zero(emitted);
  for (long a = 0; a < d; ++a)
    qubit_amps += std::conj(red.top(a)) * joint.segment(a * emitted, emitted);
  double nrm = qubit_amps.norm();
  if (nrm < 1e-12)
    throw std::runtime_error("run_plan: projection onto the ancilla vanished");
  out.qubits = PureState(n, qubit_amps / nrm);
  return out;
}

StandardMapResult run_standard_map(int D,
                                   const std::vector<Matrix>& atomic_unitaries,
                                   const Vector& phi_I) {
  if (D < 1) throw std::invalid_argument("run_standard_map: D < 1");
  if (phi_I.size() != D)
    throw std::invalid_argument("run_standard_map: phi_I length != D");
  long atom = 2l * D;  // (effective ancilla, tag), tag fastest
  for (const auto& u : atomic_unitaries)
    if (u.rows() != atom || u.cols() != atom || !is_unitary(u, kIsometryTol))
      throw std::invalid_argument("run_standard_map: non-unitary atomic step");

  Vector joint = Vector::Zero(atom);
  for (long a = 0; a < D; ++a) joint(a * 2) = phi_I(a);  // tag starts |0>
  double nrm = joint.norm();
  if (nrm == 0.0) throw std::invalid_argument("run_standard_map: zero phi_I");
  joint /= nrm;

  long emitted = 1;
  int n = static_cast<int>(atomic_unitaries.size());
  for (const auto& u : atomic_unitaries) {
    // fresh time-bin qubit in |0> (fastest index)
    Vector next = Vector::Zero(atom * emitted * 2);
    for (long a = 0; a < atom; ++a)
      for (long q = 0; q < emitted; ++q)
        next(a * emitted * 2 + q * 2) = joint(a * emitted + q);
    emitted *= 2;
    joint.swap(next);

    // atomic unitary on the (ancilla, tag) factor
    next = Vector::Zero(atom * emitted);
    for (long a = 0; a < atom; ++a)
      for (long q = 0; q < emitted; ++q) {
        Complex amp = joint(a * emitted + q);
        if (amp == Complex(0.0, 0.0)) continue;
        for (long a2 = 0; a2 < atom; ++a2) next(a2 * emitted + q) += u(a2, a) * amp;
      }
    joint.swap(next);

    // emission map: exchange tag with the fresh bin
    for (long a = 0; a < D; ++a)
      for (long q = 0; q < emitted; q += 2) {
        long i10 = (a * 2 + 1) * emitted + q;      // tag 1, bin 0
        long i01 = (a * 2) * emitted + q + 1;      // tag 0, bin 1
        std::swap(joint(i10), joint(i01));
      }

    double tag_pop = 0.0;
    for (long a = 0; a < D; ++a)
      tag_pop += joint.segment((a * 2 + 1) * emitted, emitted).squaredNorm();
    if (tag_pop > 1e-20)
      throw std::runtime_error("standard map failed to reset the tag qubit");
  }

  StandardMapResult out;
  out.joint = joint;
  Reduction red = reduce_ancilla(joint, atom, emitted);
  out.purity = red.purity;
  out.decoupled = red.purity >= 1.0 - kDecouplingTol;
  align_phase(red.top, Vector::Unit(atom, 0));
  out.atom_out = red.top;

  Vector qubit_amps = Vector::Zero(emitted);
  for (long a = 0; a < atom; ++a)
    qubit_amps += std::conj(red.top(a)) * joint.segment(a * emitted, emitted);
  double qn = qubit_amps.norm();
  if (qn < 1e-12)
    throw std::runtime_error("run_standard_map: ancilla projection vanished");
  out.qubits = PureState(n, qubit_amps / qn);
  return out;
}

std::vector<Isometry> induced_isometries(int D,
                                         const std::vector<Matrix>& atomic_unitaries) {
  long atom = 2l * D;
  std::vector<Isometry> steps;
  steps.reserve(atomic_unitaries.size());
  int k = 1;
  for (const auto& u : atomic_unitaries) {
    if (u.rows() != atom || u.cols() != atom)
      throw std::invalid_argument("induced_isometries: unitary is not 2D x 2D");
    Matrix v(atom, D);
    for (long beta = 0; beta < D; ++beta) v.col(beta) = u.col(beta * 2);
    steps.push_back(Isometry{std::move(v), k++});
  }
  return steps;
}

void apply_single_qubit_gate_inplace(Vector& amps, int n, int site,
                                     const Matrix& u) {
  if (site < 1 || site > n) throw std::invalid_argument("site out of range");
  if (u.rows() != 2 || u.cols() != 2)
    throw std::invalid_argument("expected a 2x2 gate");
  long stride = 1l << (n - site);
  for (long idx = 0; idx < amps.size(); ++idx) {
    if ((idx / stride) % 2 != 0) continue;
    Complex a0 = amps(idx), a1 = amps(idx + stride);
    amps(idx) = u(0, 0) * a0 + u(0, 1) * a1;
    amps(idx + stride) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

void apply_two_qubit_gate_inplace(Vector& amps, int n, int site_a, int site_b,
                                  const Matrix& u) {
  if (site_a < 1 || site_a > n || site_b < 1 || site_b > n || site_a == site_b)
    throw std::invalid_argument("invalid site pair");
  if (u.rows() != 4 || u.cols() != 4)
    throw std::invalid_argument("expected a 4x4 gate");
  long sa = 1l << (n - site_a), sb = 1l << (n - site_b);
  for (long idx = 0; idx < amps.size(); ++idx) {
    if ((idx / sa) % 2 != 0 || (idx / sb) % 2 != 0) continue;
    long i00 = idx, i01 = idx + sb, i10 = idx + sa, i11 = idx + sa + sb;
    Complex a00 = amps(i00), a01 = amps(i01), a10 = amps(i10), a11 = amps(i11);
    amps(i00) = u(0, 0) * a00 + u(0, 1) * a01 + u(0, 2) * a10 + u(0, 3) * a11;
    amps(i01) = u(1, 0) * a00 + u(1, 1) * a01 + u(1, 2) * a10 + u(1, 3) * a11;
    amps(i10) = u(2, 0) * a00 + u(2, 1) * a01 + u(2, 2) * a10 + u(2, 3) * a11;
    amps(i11) = u(3, 0) * a00 + u(3, 1) * a01 + u(3, 2) * a10 + u(3, 3) * a11;
  }
}

PureState apply_two_qubit_gate(const PureState& state, int site_a, int site_b,
                               const Matrix& u) {
  Vector amps = state.amplitudes();
  apply_two_qubit_gate_inplace(amps, state.n_sites(), site_a, site_b, u);
  return PureState(state.n_sites(), std::move(amps));
}

PureState run_qubit_chain(int n, const std::vector<GateLayer>& layers,
                          const PureState& initial) {
  if (initial.n_sites() != n || !initial.is_qubit_register())
    throw std::invalid_argument("run_qubit_chain: initial state shape mismatch");
  Vector amps = initial.amplitudes();
  for (size_t l = 0; l < layers.size(); ++l) {
    int prev = 0;
    for (size_t g = 0; g < layers[l].gates.size(); ++g) {
      const GateOp& op = layers[l].gates[g];
      bool ring = (op.site_a == n && op.site_b == 1);
      if (!ring && op.site_b != op.site_a + 1)
        throw std::invalid_argument("run_qubit_chain: gate is not nearest-neighbor");
      if (ring && !(g == 0 && l > 0))
        throw std::invalid_argument(
            "run_qubit_chain: (n,1) gate only permitted at a layer boundary");
      if (!ring) {
        if (op.site_a < prev)
          throw std::invalid_argument("run_qubit_chain: gates out of order");
        prev = op.site_a;
      }
      if (!is_unitary(op.unitary, kIsometryTol))
        throw std::invalid_argument("run_qubit_chain: non-unitary gate");
      apply_two_qubit_gate_inplace(amps, n, op.site_a, op.site_b, op.unitary);
    }
  }
  return PureState(n, std::move(amps));
}

PureState run_chain_via_ancilla(int n, const std::vector<Matrix>& gates) {
  if (static_cast<int>(gates.size()) != n - 1)
    throw std::invalid_argument("run_chain_via_ancilla: expected n-1 gates");
  int m = n + 1;  // ancilla rides as the last site
  Vector amps = Vector::Zero(1l << m);
  amps(0) = 1.0;
  Matrix swap(4, 4);
  swap.setZero();
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  for (int k = 1; k <= n - 1; ++k) {
    apply_two_qubit_gate_inplace(amps, m, k, m, gates[k - 1]);
    apply_two_qubit_gate_inplace(amps, m, m, k + 1, swap);
  }
  // ancilla returns to |0> exactly; project it out
  Vector reg = Vector::Zero(1l << n);
  double leak = 0.0;
  for (long idx = 0; idx < amps.size(); ++idx) {
    if (idx % 2 == 0)
      reg(idx / 2) = amps(idx);
    else
      leak += std::norm(amps(idx));
  }
  if (leak > 1e-20)
    throw std::runtime_error("run_chain_via_ancilla: ancilla failed to decouple");
  return PureState(n, std::move(reg));
}

MeasurementResult measure_ancilla(const JointState& joint, const Vector& basis0,
                                  const Vector& basis1, int outcome) {
  if (joint.ancilla_dim != 2)
    throw std::invalid_argument("measure_ancilla: ancilla must be 2-level");
  if (basis0.size() != 2 || basis1.size() != 2)
    throw std::invalid_argument("measure_ancilla: basis vectors must have length 2");
  if (std::abs(basis0.norm() - 1.0) > kIsometryTol ||
      std::abs(basis1.norm() - 1.0) > kIsometryTol ||
      std::abs(basis0.dot(basis1)) > kIsometryTol)
    throw std::invalid_argument("measure_ancilla: basis is not orthonormal");
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("measure_ancilla: outcome must be 0 or 1");

  const Vector& b = (outcome == 0) ? basis0 : basis1;
  long reg = 1l << joint.n_emitted;
  Vector proj = std::conj(b(0)) * joint.amplitudes.segment(0, reg) +
                std::conj(b(1)) * joint.amplitudes.segment(reg, reg);
  MeasurementResult r;
  r.probability = proj.squaredNorm();
  if (r.probability >= 1e-14)
    r.post_state = PureState(joint.n_emitted, proj / std::sqrt(r.probability));
  return r;
}

}  // namespace seqmps
