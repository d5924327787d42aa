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

#include "seqmps/cavity.hpp"

#include <Eigen/Eigenvalues>
#include <array>
#include <cmath>
#include <stdexcept>

namespace seqmps {

namespace {
constexpr int kLevelB = 0;
constexpr int kLevelA = 1;
constexpr int kLevelE = 2;
}  // namespace

double CavityModel::resonant_delta() const {
  return omega * omega / (4.0 * delta_large) - g * g / delta_large;
}

CavityModel CavityModel::resonant(double g, double omega, double delta_large,
                                  int n_max) {
  CavityModel m{g, omega, delta_large, 0.0, n_max};
  m.delta_small = m.resonant_delta();
  return m;
}

double CavityModel::adiabatic_ratio() const {
  return std::abs(delta_large) / std::max(std::abs(g), std::abs(omega));
}

double CavityModel::selectivity_ratio() const { return 2.0 * g / omega; }

void CavityModel::validate() const {
  if (delta_large == 0.0)
    throw std::invalid_argument("CavityModel: Delta must be nonzero");
  if (n_max < 1) throw std::invalid_argument("CavityModel: n_max < 1");
}

Matrix full_hamiltonian(const CavityModel& model) {
  model.validate();
  int nf = model.n_max + 1;
  long dim = 3l * nf;
  Matrix h = Matrix::Zero(dim, dim);
  auto idx = [nf](int level, int n) { return level * nf + n; };
  for (int n = 0; n < nf; ++n) {
    h(idx(kLevelA, n), idx(kLevelA, n)) =
        -model.delta_large * (1 + n) + model.delta_small;
    h(idx(kLevelB, n), idx(kLevelB, n)) = -model.delta_large * n;
    h(idx(kLevelE, n), idx(kLevelE, n)) = -model.delta_large * n;
    // laser: e <-> a
    h(idx(kLevelE, n), idx(kLevelA, n)) += model.omega / 2.0;
    h(idx(kLevelA, n), idx(kLevelE, n)) += model.omega / 2.0;
    // cavity: |e, n-1> <-> |b, n>
    if (n >= 1) {
      double cpl = model.g * std::sqrt(static_cast<double>(n));
      h(idx(kLevelE, n - 1), idx(kLevelB, n)) += cpl;
      h(idx(kLevelB, n), idx(kLevelE, n - 1)) += cpl;
    }
  }
  return h;
}

Matrix adiabatic_hamiltonian(const CavityModel& model) {
  model.validate();
  int nf = model.n_max + 1;
  long dim = 2l * nf;
  double stark_a = model.omega * model.omega / (4.0 * model.delta_large);
  double stark_b = model.g * model.g / model.delta_large;
  double coupling = model.g * model.omega / (2.0 * model.delta_large);
  Matrix h = Matrix::Zero(dim, dim);
  auto idx = [nf](int level, int n) { return level * nf + n; };
  for (int n = 0; n < nf; ++n) {
    h(idx(kLevelA, n), idx(kLevelA, n)) = stark_a - model.delta_small - stark_b;
    h(idx(kLevelB, n), idx(kLevelB, n)) = n * stark_b - stark_b;
    if (n >= 1) {
      double cpl = coupling * std::sqrt(static_cast<double>(n));
      h(idx(kLevelA, n - 1), idx(kLevelB, n)) += cpl;
      h(idx(kLevelB, n), idx(kLevelA, n - 1)) += cpl;
    }
  }
  return h;
}

Matrix selective_hamiltonian(const CavityModel& model) {
  model.validate();
  double coupling = model.g * model.omega / (2.0 * model.delta_large);
  // basis {|b,0>, |b,1>, |a,0>, |a,1>}
  Matrix h = Matrix::Zero(4, 4);
  h(2, 1) = coupling;  // |a,0><b,1|
  h(1, 2) = coupling;

  Matrix sx(2, 2), sy(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -kImag, kImag, 0;
  Matrix pauli_form =
      (model.g * model.omega / (4.0 * model.delta_large)) *
      (kron(sx, sx) + kron(sy, sy));
  if (max_abs(h - pauli_form) > 1e-14)
    throw std::logic_error("selective Hamiltonian forms disagree");
  return h;
}

Vector evolve(const Matrix& hamiltonian, double t, const Vector& psi0) {
  if (hamiltonian.rows() != hamiltonian.cols() ||
      hamiltonian.rows() != psi0.size())
    throw std::invalid_argument("evolve: dimension mismatch");
  if (max_abs(hamiltonian - hamiltonian.adjoint()) > 1e-10)
    throw std::invalid_argument("evolve: Hamiltonian is not Hermitian");
  if (!std::isfinite(t)) throw std::invalid_argument("evolve: t must be finite");
  Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian);
  Vector phases(es.eigenvalues().size());
  for (long i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(-kImag * es.eigenvalues()(i) * t);
  return es.eigenvectors() *
         (phases.asDiagonal() * (es.eigenvectors().adjoint() * psi0));
}

Matrix exp_i_hermitian(const Matrix& a) {
  if (max_abs(a - a.adjoint()) > 1e-10)
    throw std::invalid_argument("exp_i_hermitian: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Vector phases(es.eigenvalues().size());
  for (long i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(kImag * es.eigenvalues()(i));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

SqrtIswapPulse sqrt_iswap_pulse(const CavityModel& model) {
  model.validate();
  double coupling = model.g * model.omega / (2.0 * model.delta_large);
  if (coupling == 0.0)
    throw std::invalid_argument("sqrt_iswap_pulse: zero effective coupling");
  SqrtIswapPulse p;
  p.duration = (M_PI / 4.0) / std::abs(coupling);
  // +i convention: evolve under the drive phase that rotates the
  // one-excitation doublet by exp(+i pi X / 4).
  Matrix hx = Matrix::Zero(4, 4);
  hx(2, 1) = hx(1, 2) = -std::abs(coupling);
  Matrix u = Matrix::Zero(4, 4);
  for (int c = 0; c < 4; ++c)
    u.col(c) = evolve(hx, p.duration, Vector::Unit(4, c));
  p.achieved_gate = u;
  return p;
}

SelectivityResult selectivity_error(const CavityModel& model,
                                    HamiltonianLevel level) {
  model.validate();
  if (model.n_max < 3)
    throw std::invalid_argument("selectivity_error: n_max >= 3 required");
  SqrtIswapPulse pulse = sqrt_iswap_pulse(model);
  if (!std::isfinite(pulse.duration) || pulse.duration <= 0.0)
    throw std::runtime_error("selectivity_error: pulse duration underflow");

  int nf = model.n_max + 1;
  Matrix h;
  if (level == HamiltonianLevel::kFull) {
    h = full_hamiltonian(model);
  } else {
    // drive-phase flip so the effective evolution matches the +i pulse
    h = -adiabatic_hamiltonian(model);
  }
  long a0 = static_cast<long>(kLevelA) * nf + 0;
  long b1 = static_cast<long>(kLevelB) * nf + 1;

  // ideal pulse block in the (|a,0>, |b,1>) basis
  Matrix ideal(2, 2);
  double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  ideal << c, kImag * s, kImag * s, c;

  Matrix u_block(2, 2);
  double leakage = 0.0;
  std::array<long, 2> logical{a0, b1};
  for (int col = 0; col < 2; ++col) {
    Vector psi0 = Vector::Unit(h.rows(), logical[col]);
    for (double frac : {0.5, 1.0}) {
      Vector psi = evolve(h, frac * pulse.duration, psi0);
      double top = 0.0;
      for (int lev = 0; lev < (level == HamiltonianLevel::kFull ? 3 : 2); ++lev)
        top += std::norm(psi(lev * nf + model.n_max));
      leakage = std::max(leakage, top);
      if (frac == 1.0) {
        u_block(0, col) = psi(a0);
        u_block(1, col) = psi(b1);
      }
    }
  }
  Matrix m = ideal.adjoint() * u_block;
  double f = (std::norm(m.trace()) + 2.0) / 6.0;
  return SelectivityResult{1.0 - f, leakage};
}

std::vector<SweepRow> selectivity_sweep(const std::vector<double>& deltas_over_g,
                                        double omega_over_g, int n_max) {
  if (deltas_over_g.empty())
    throw std::invalid_argument("selectivity_sweep: empty grid");
  std::vector<SweepRow> rows;
  for (double d : deltas_over_g) {
    CavityModel m = CavityModel::resonant(1.0, omega_over_g, d, n_max);
    for (auto level : {HamiltonianLevel::kFull, HamiltonianLevel::kAdiabatic}) {
      SelectivityResult r = selectivity_error(m, level);
      rows.push_back(SweepRow{d, omega_over_g, n_max,
                              level == HamiltonianLevel::kFull ? "full" : "adiabatic",
                              r.infidelity, r.leakage});
    }
  }
  return rows;
}

// ---- polarization encoding -------------------------------------------------

namespace {
constexpr int kAtomA = 0, kAtomB = 1, kAtomAp = 2, kAtomBp = 3;
constexpr int kCavVac = 0, kCavA = 1, kCavB = 2;
constexpr long kPolDim = 12;

long pol_idx(int atom, int cav) { return atom * 3 + cav; }

Matrix branch_generator(double k_a, double k_b) {
  Matrix k = Matrix::Zero(kPolDim, kPolDim);
  k(pol_idx(kAtomAp, kCavVac), pol_idx(kAtomA, kCavA)) = k_a;
  k(pol_idx(kAtomA, kCavA), pol_idx(kAtomAp, kCavVac)) = k_a;
  k(pol_idx(kAtomBp, kCavVac), pol_idx(kAtomB, kCavB)) = k_b;
  k(pol_idx(kAtomB, kCavB), pol_idx(kAtomBp, kCavVac)) = k_b;
  return k;
}
}  // namespace

double PolarizationModel::branch_ratio_a() const {
  return std::abs(delta_a) /
         std::max({std::abs(g_a), std::abs(omega_a), std::abs(g_b), std::abs(omega_b)});
}

double PolarizationModel::branch_ratio_b() const {
  return std::abs(delta_b) /
         std::max({std::abs(g_a), std::abs(omega_a), std::abs(g_b), std::abs(omega_b)});
}

void PolarizationModel::validate() const {
  if (delta_a == 0.0 || delta_b == 0.0)
    throw std::invalid_argument("PolarizationModel: detunings must be nonzero");
}

Matrix polarization_selective_hamiltonian(const PolarizationModel& model) {
  model.validate();
  return branch_generator(model.g_a * model.omega_a / (2.0 * model.delta_a),
                          model.g_b * model.omega_b / (2.0 * model.delta_b));
}

Matrix polarization_selective_unitary(const PolarizationModel& model, double t) {
  return exp_i_hermitian(t * polarization_selective_hamiltonian(model));
}

Matrix polarization_pulse() {
  return exp_i_hermitian((M_PI / 2.0) * branch_generator(1.0, 1.0));
}

Matrix polarization_pulse_branch_a() {
  return exp_i_hermitian((M_PI / 2.0) * branch_generator(1.0, 0.0));
}

Matrix polarization_sqrt_iswap() {
  Matrix pulse = polarization_pulse();
  Matrix rot = Matrix::Zero(kPolDim, kPolDim);
  for (int cav = 0; cav < 3; ++cav) {
    rot(pol_idx(kAtomAp, cav), pol_idx(kAtomBp, cav)) = M_PI / 4.0;
    rot(pol_idx(kAtomBp, cav), pol_idx(kAtomAp, cav)) = M_PI / 4.0;
  }
  return pulse.adjoint() * exp_i_hermitian(rot) * pulse;
}

Matrix polarization_logical_block(const Matrix& op) {
  std::array<long, 4> basis{pol_idx(kAtomB, kCavA), pol_idx(kAtomB, kCavB),
                            pol_idx(kAtomA, kCavA), pol_idx(kAtomA, kCavB)};
  Matrix b(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = op(basis[i], basis[j]);
  return b;
}

PureState polarization_decoupling(const Vector& atom_photon_state, Complex alpha,
                                  Complex beta, double* atom_purity) {
  long total = atom_photon_state.size();
  if (total % 4 != 0)
    throw std::invalid_argument("polarization_decoupling: expected 4 atomic levels");
  long reg = total / 4;
  int k = 0;
  while ((1l << k) < reg) ++k;
  if ((1l << k) != reg)
    throw std::invalid_argument("polarization_decoupling: register is not qubits");

  auto block = [&](int atom) { return atom_photon_state.segment(atom * reg, reg); };
  if (std::abs(block(kAtomA).norm() - std::abs(alpha)) > 1e-8 ||
      std::abs(block(kAtomB).norm() - std::abs(beta)) > 1e-8 ||
      block(kAtomAp).norm() > 1e-10 || block(kAtomBp).norm() > 1e-10)
    throw std::invalid_argument(
        "polarization_decoupling: state is not of the form a|a>|psi_a> + b|b>|psi_b>");

  // extend with the cavity (vacuum) factor: index (atom*3 + cav) * reg + q
  Vector joint = Vector::Zero(kPolDim * reg);
  for (int atom = 0; atom < 4; ++atom)
    joint.segment(pol_idx(atom, kCavVac) * reg, reg) = block(atom);

  auto apply12 = [&](const Matrix& op) {
    Vector next = Vector::Zero(kPolDim * reg);
    for (long r = 0; r < kPolDim; ++r)
      for (long c = 0; c < kPolDim; ++c) {
        if (op(r, c) == Complex(0.0, 0.0)) continue;
        next.segment(r * reg, reg) += op(r, c) * joint.segment(c * reg, reg);
      }
    joint.swap(next);
  };

  // level relabel |a> -> -i|a'>, |b> -> -i|b'>
  Matrix relabel = Matrix::Zero(kPolDim, kPolDim);
  for (int cav = 0; cav < 3; ++cav) {
    relabel(pol_idx(kAtomAp, cav), pol_idx(kAtomA, cav)) = -kImag;
    relabel(pol_idx(kAtomA, cav), pol_idx(kAtomAp, cav)) = -kImag;
    relabel(pol_idx(kAtomBp, cav), pol_idx(kAtomB, cav)) = -kImag;
    relabel(pol_idx(kAtomB, cav), pol_idx(kAtomBp, cav)) = -kImag;
  }
  apply12(relabel);
  apply12(polarization_pulse_branch_a());

  Matrix swap_ab = Matrix::Identity(kPolDim, kPolDim);
  for (int cav = 0; cav < 3; ++cav) {
    swap_ab(pol_idx(kAtomA, cav), pol_idx(kAtomA, cav)) = 0.0;
    swap_ab(pol_idx(kAtomB, cav), pol_idx(kAtomB, cav)) = 0.0;
    swap_ab(pol_idx(kAtomB, cav), pol_idx(kAtomA, cav)) = 1.0;
    swap_ab(pol_idx(kAtomA, cav), pol_idx(kAtomB, cav)) = 1.0;
  }
  apply12(swap_ab);
  apply12(polarization_pulse());

  // the atom sits in |b> with the cavity holding the final polarization qubit
  Vector out = Vector::Zero(reg * 2);
  for (long q = 0; q < reg; ++q) {
    out(q * 2 + 0) = joint(pol_idx(kAtomB, kCavA) * reg + q);
    out(q * 2 + 1) = joint(pol_idx(kAtomB, kCavB) * reg + q);
  }
  double residual = 0.0;
  for (long p = 0; p < kPolDim; ++p) {
    if (p == pol_idx(kAtomB, kCavA) || p == pol_idx(kAtomB, kCavB)) continue;
    residual += joint.segment(p * reg, reg).squaredNorm();
  }
  if (atom_purity) {
    Matrix rho = Matrix::Zero(4, 4);
    for (int am = 0; am < 4; ++am)
      for (int an = 0; an < 4; ++an)
        for (int cav = 0; cav < 3; ++cav)
          rho(am, an) += joint.segment(pol_idx(an, cav) * reg, reg)
                             .dot(joint.segment(pol_idx(am, cav) * reg, reg));
    *atom_purity = (rho * rho).trace().real();
  }
  if (residual > 1e-20)
    throw std::runtime_error("polarization_decoupling: atom failed to decouple");
  return PureState(k + 1, out / out.norm());
}

}  // namespace seqmps
