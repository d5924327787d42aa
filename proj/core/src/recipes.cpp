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

#include "seqmps/recipes.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "seqmps/gates.hpp"

namespace seqmps {

WParams WParams::uniform(int n) {
  // Theta_k = asin(1 / sqrt(n - k + 1)) makes every amplitude 1/sqrt(n).
  WParams p;
  for (int k = 1; k <= n - 1; ++k) {
    p.thetas.push_back(std::asin(1.0 / std::sqrt(static_cast<double>(n - k + 1))));
    p.phis.push_back(0.0);
  }
  return p;
}

PureState target_w_state(const WParams& params) {
  if (params.thetas.size() != params.phis.size())
    throw std::invalid_argument("WParams: theta/phi length mismatch");
  if (params.thetas.empty())
    throw std::invalid_argument("WParams: need at least one angle (n >= 2)");
  int n = params.n_sites();
  Vector amps = Vector::Zero(1l << n);
  double cosprod = 1.0;
  for (int j = 1; j <= n - 1; ++j) {
    Complex coeff = cosprod * std::exp(kImag * params.phis[j - 1]) *
                    std::sin(params.thetas[j - 1]);
    int site = n - j + 1;
    amps(1l << (n - site)) = coeff;
    cosprod *= std::cos(params.thetas[j - 1]);
  }
  amps(1l << (n - 1)) = cosprod;  // site 1 carries the full cosine product
  return PureState(n, std::move(amps));
}

CascadeAngles telescope_cascade(const Vector& site_amplitudes) {
  long n = site_amplitudes.size();
  if (n < 2) throw std::invalid_argument("telescope_cascade: need n >= 2");
  if (std::abs(site_amplitudes.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("telescope_cascade: amplitudes not normalized");

  // The final emission amplitude is the (real, >= 0) cosine product, so a
  // global phase is factored off the whole list and reported back.
  Complex last = site_amplitudes(n - 1);
  Complex phase =
      (std::abs(last) > 1e-15) ? last / std::abs(last) : Complex(1.0, 0.0);
  CascadeAngles out;
  out.phase = phase;
  double p = 1.0;  // running cosine product
  for (long k = 0; k < n - 1; ++k) {
    Complex target = std::conj(phase) * site_amplitudes(k);
    Complex s = (p > 1e-15) ? target / p : Complex(0.0, 0.0);
    if (std::abs(s) > 1.0) s /= std::abs(s);
    double c = std::sqrt(std::max(0.0, 1.0 - std::norm(s)));
    out.s.push_back(s);
    out.c.push_back(c);
    p *= c;
  }
  return out;
}

GenerationPlan w_cascade_plan(const std::vector<double>& c,
                              const std::vector<Complex>& s,
                              Complex final_phase) {
  if (c.size() != s.size())
    throw std::invalid_argument("w_cascade_plan: angle list length mismatch");
  int n = static_cast<int>(c.size()) + 1;
  GenerationPlan plan;
  plan.ancilla_dim = 2;
  for (int k = 1; k <= n; ++k) {
    double ck = (k < n) ? c[k - 1] : 0.0;
    Complex sk = (k < n) ? s[k - 1] : Complex(1.0, 0.0);
    if (std::abs(ck * ck + std::norm(sk) - 1.0) > 1e-9)
      throw std::invalid_argument("w_cascade_plan: |c|^2 + |s|^2 != 1");
    Matrix v = Matrix::Zero(4, 2);  // rows (ancilla*2 + qubit), a = 0, b = 1
    v(0, 0) = ck;  // a -> a, no photon
    v(3, 0) = sk;  // a -> b, photon emitted
    v(2, 1) = 1.0; // b -> b, no photon
    plan.steps.push_back(Isometry{std::move(v), k});
  }
  plan.phi_I = Vector::Zero(2);
  plan.phi_I(0) = 1.0;
  plan.phi_F = Vector::Zero(2);
  plan.phi_F(1) = final_phase;
  return plan;
}

GenerationPlan w_source_plan(const WParams& params) {
  PureState target = target_w_state(params);
  int n = target.n_sites();
  Vector site_amps(n);
  for (int k = 1; k <= n; ++k) site_amps(k - 1) = target.amplitude(1l << (n - k));
  CascadeAngles tele = telescope_cascade(site_amps);
  // phi_F absorbs the factored-off global phase so the emitted amplitudes
  // match the target exactly, not just up to phase
  return w_cascade_plan(tele.c, tele.s, std::conj(tele.phase));
}

MatrixProductState w_source_mps(const std::vector<double>& c,
                                const std::vector<Complex>& s) {
  if (c.size() != s.size() || c.empty())
    throw std::invalid_argument("w_source_mps: bad angle lists");
  std::vector<MatrixProductState::SiteTensor> tensors;
  for (size_t k = 0; k < c.size(); ++k) {
    Matrix a0 = Matrix::Zero(2, 2), a1 = Matrix::Zero(2, 2);
    a0(0, 0) = c[k];
    a0(1, 1) = 1.0;
    a1(1, 0) = s[k];
    tensors.push_back({std::move(a0), std::move(a1)});
  }
  Vector phi_i = Vector::Zero(2), phi_f = Vector::Zero(2);
  phi_i(0) = 1.0;  // |a>
  phi_f(1) = 1.0;  // |b>
  return MatrixProductState(std::move(tensors), std::move(phi_i),
                            std::move(phi_f));
}

WParams w_params_for_adiabatic(const WParams& target) {
  PureState t = target_w_state(target);
  int n = t.n_sites();
  Vector site_amps(n);
  for (int k = 1; k <= n; ++k) site_amps(k - 1) = t.amplitude(1l << (n - k));
  CascadeAngles tele = telescope_cascade(site_amps);
  WParams out;
  for (size_t k = 0; k < tele.s.size(); ++k) {
    double mag = std::min(1.0, std::abs(tele.s[k]));
    out.thetas.push_back(std::asin(mag));
    out.phis.push_back(mag > 1e-15 ? std::arg(tele.s[k]) : 0.0);
  }
  return out;
}

Matrix rotation_u(AtomicLevel k, AtomicLevel l, AtomicLevel m, double phi,
                  double theta) {
  int ki = static_cast<int>(k), li = static_cast<int>(l), mi = static_cast<int>(m);
  if (ki == li || ki == mi || li == mi)
    throw std::invalid_argument("rotation_u: level labels must be distinct");
  Matrix u = Matrix::Zero(3, 3);
  u(ki, ki) = std::cos(theta);
  u(li, li) = std::cos(theta);
  u(ki, li) = std::exp(kImag * phi) * std::sin(theta);
  u(li, ki) = -std::exp(-kImag * phi) * std::sin(theta);
  u(mi, mi) = 1.0;
  return u;
}

Matrix emission_map() {
  Matrix m = Matrix::Zero(6, 3);  // rows (level * 2 + photon bit)
  m(static_cast<int>(AtomicLevel::kB1) * 2 + 1, static_cast<int>(AtomicLevel::kA)) = 1.0;
  m(static_cast<int>(AtomicLevel::kB1) * 2 + 0, static_cast<int>(AtomicLevel::kB1)) = 1.0;
  m(static_cast<int>(AtomicLevel::kB2) * 2 + 0, static_cast<int>(AtomicLevel::kB2)) = 1.0;
  return m;
}

AtomicRecipe adiabatic_recipe(RecipeKind kind, int n,
                              const std::vector<double>& thetas,
                              const std::vector<double>& phis) {
  if (n < 2) throw std::invalid_argument("adiabatic_recipe: n >= 2");
  if (thetas.size() != phis.size())
    throw std::invalid_argument("adiabatic_recipe: theta/phi length mismatch");
  using L = AtomicLevel;
  const double hp = M_PI / 2;
  AtomicRecipe r;
  r.emission = emission_map();
  switch (kind) {
    case RecipeKind::kW: {
      if (static_cast<int>(thetas.size()) != n - 1)
        throw std::invalid_argument("W recipe needs n-1 angle pairs");
      r.initial = L::kB2;
      for (int i = 0; i < n - 1; ++i)
        r.unitaries.push_back(rotation_u(L::kA, L::kB2, L::kB1, phis[i], thetas[i]));
      r.unitaries.push_back(rotation_u(L::kA, L::kB2, L::kB1, 0.0, hp));
      break;
    }
    case RecipeKind::kGhz: {
      if (thetas.size() != 1)
        throw std::invalid_argument("GHZ recipe needs exactly one angle pair");
      r.initial = L::kA;
      r.unitaries.push_back(rotation_u(L::kA, L::kB2, L::kB1, phis[0], thetas[0]));
      for (int i = 2; i <= n - 1; ++i)
        r.unitaries.push_back(rotation_u(L::kA, L::kB1, L::kB2, 0.0, hp));
      r.unitaries.push_back(rotation_u(L::kB1, L::kB2, L::kA, 0.0, hp) *
                            rotation_u(L::kA, L::kB1, L::kB2, 0.0, hp));
      break;
    }
    case RecipeKind::kCluster: {
      if (static_cast<int>(thetas.size()) != n)
        throw std::invalid_argument("cluster recipe needs n angle pairs");
      r.initial = L::kB2;
      for (int i = 0; i < n - 1; ++i)
        r.unitaries.push_back(rotation_u(L::kA, L::kB2, L::kB1, phis[i], thetas[i]) *
                              rotation_u(L::kA, L::kB1, L::kB2, 0.0, hp));
      r.unitaries.push_back(rotation_u(L::kA, L::kB1, L::kB2, phis[n - 1], thetas[n - 1]) *
                            rotation_u(L::kB1, L::kB2, L::kA, 0.0, hp) *
                            rotation_u(L::kA, L::kB1, L::kB2, 0.0, hp));
      break;
    }
    default:
      throw std::invalid_argument("unknown recipe kind");
  }
  return r;
}

AtomicRunResult run_adiabatic_recipe(const AtomicRecipe& recipe) {
  int n = static_cast<int>(recipe.unitaries.size());
  if (n < 1) throw std::invalid_argument("recipe has no steps");
  Vector joint = Vector::Zero(3);
  joint(static_cast<int>(recipe.initial)) = 1.0;
  long emitted = 1;
  for (const auto& u : recipe.unitaries) {
    if (!is_unitary(u, kIsometryTol))
      throw std::invalid_argument("recipe unitary violates unitarity");
    Vector rotated = Vector::Zero(3 * emitted);
    for (int l = 0; l < 3; ++l)
      for (int l2 = 0; l2 < 3; ++l2)
        rotated.segment(l2 * emitted, emitted) +=
            u(l2, l) * joint.segment(l * emitted, emitted);
    Vector next = Vector::Zero(3 * emitted * 2);
    for (int l = 0; l < 3; ++l)
      for (int l2 = 0; l2 < 3; ++l2)
        for (int b = 0; b < 2; ++b) {
          Complex coeff = recipe.emission(l2 * 2 + b, l);
          if (coeff == Complex(0.0, 0.0)) continue;
          for (long q = 0; q < emitted; ++q)
            next(l2 * emitted * 2 + q * 2 + b) += coeff * rotated(l * emitted + q);
        }
    joint.swap(next);
    emitted *= 2;
  }

  Matrix rho = Matrix::Zero(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      rho(a, b) = joint.segment(b * emitted, emitted).dot(joint.segment(a * emitted, emitted));
  AtomicRunResult out;
  out.purity = (rho * rho).trace().real();
  out.decoupled = out.purity >= 1.0 - kDecouplingTol;
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  Vector top = es.eigenvectors().col(2);
  double vmax = top.cwiseAbs().maxCoeff();
  for (long i = 0; i < 3; ++i)
    if (std::abs(top(i)) >= 1e-8 * vmax) {
      top *= std::conj(top(i) / std::abs(top(i)));
      break;
    }
  out.atom_out = top;
  Vector photons = Vector::Zero(emitted);
  for (int a = 0; a < 3; ++a)
    photons += std::conj(top(a)) * joint.segment(a * emitted, emitted);
  double nrm = photons.norm();
  if (nrm < 1e-12)
    throw std::runtime_error("run_adiabatic_recipe: atom projection vanished");
  out.photons = PureState(n, photons / nrm);
  return out;
}

PureState cluster_state(int n, const std::vector<double>& thetas,
                        const std::vector<double>& phis) {
  if (n < 1) throw std::invalid_argument("cluster_state: n >= 1");
  if (static_cast<int>(thetas.size()) != n || static_cast<int>(phis.size()) != n)
    throw std::invalid_argument("cluster_state: angle lists must have length n");
  Vector amps(1l << n);
  for (long idx = 0; idx < amps.size(); ++idx) {
    int x_prev = static_cast<int>((idx >> (n - 1)) & 1);
    Complex a = x_prev ? std::exp(kImag * phis[0]) * std::sin(thetas[0])
                       : Complex(std::cos(thetas[0]), 0.0);
    for (int i = 2; i <= n; ++i) {
      int x = static_cast<int>((idx >> (n - i)) & 1);
      if (x == 0)
        a *= x_prev ? -std::exp(-kImag * phis[i - 1]) * std::sin(thetas[i - 1])
                    : Complex(std::cos(thetas[i - 1]), 0.0);
      else
        a *= x_prev ? Complex(std::cos(thetas[i - 1]), 0.0)
                    : std::exp(kImag * phis[i - 1]) * std::sin(thetas[i - 1]);
      x_prev = x;
    }
    amps(idx) = a;
  }
  return PureState(n, std::move(amps));
}

double cluster_stabilizer_sign(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("stabilizer index out of range");
  return i < n ? -1.0 : 1.0;
}

AtomicClusterSequence atomic_cluster_sequence(int n) {
  if (n < 2) throw std::invalid_argument("atomic_cluster_sequence: n >= 2");
  int m = n + 1;
  Vector amps = Vector::Zero(1l << m);
  // cavity and atoms 1..n-1 in (|0> + |1>)/sqrt(2), atom n in |0>
  double w = std::pow(0.5, 0.5 * n);
  for (long idx = 0; idx < amps.size(); ++idx)
    if ((idx & 1) == 0) amps(idx) = w;  // atom n (fastest bit) fixed to 0

  AtomicClusterSequence seq{PureState(m, std::move(amps)), {}, {}};
  for (int k = 1; k <= n; ++k)
    seq.iswaps.gates.push_back(GateOp{1, k + 1, iswap_gate(), "ISWAP"});

  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  for (int k = 1; k <= n; ++k) {
    Matrix comp = (k == 1) ? rz_gate(-M_PI / 2) : rz_gate(-M_PI);
    if (k <= n - 1) comp = z * comp;  // sign convention of the target family
    seq.compensation.emplace_back(k + 1, std::move(comp));
  }
  return seq;
}

PureState run_atomic_cluster(const AtomicClusterSequence& seq,
                             bool with_compensation) {
  int m = seq.initial.n_sites();
  int n = m - 1;
  Vector amps = seq.initial.amplitudes();
  for (const auto& g : seq.iswaps.gates)
    apply_two_qubit_gate_inplace(amps, m, g.site_a, g.site_b, g.unitary);
  if (with_compensation)
    for (const auto& [site, u] : seq.compensation)
      apply_single_qubit_gate_inplace(amps, m, site, u);
  // the cavity (site 1, slowest bit) decouples in |0>
  long half = amps.size() / 2;
  double leak = amps.tail(half).squaredNorm();
  if (leak > 1e-20)
    throw std::runtime_error("atomic cluster sequence: cavity failed to decouple");
  Vector reg = amps.head(half);
  return PureState(n, reg / reg.norm());
}

AtomicGhzSequence atomic_ghz_sequence(int n) {
  if (n < 2) throw std::invalid_argument("atomic_ghz_sequence: n >= 2");
  Vector amps = Vector::Zero(1l << n);
  amps(0) = 1.0 / std::sqrt(2.0);
  amps(1l << (n - 1)) = 1.0 / std::sqrt(2.0);  // first atom in (|a> + |b>)/sqrt(2)
  AtomicGhzSequence seq{PureState(n, std::move(amps)), {}};
  for (int i = 1; i <= n - 1; ++i) {
    seq.gates.gates.push_back(GateOp{i, i + 1, cnot_gate(), "CNOT"});
    seq.gates.gates.push_back(GateOp{i, i + 1, swap_gate(), "SWAP"});
  }
  return seq;
}

PureState run_atomic_ghz(const AtomicGhzSequence& seq) {
  return run_qubit_chain(seq.initial.n_sites(), {seq.gates}, seq.initial);
}

PureState ghz_state(int n) {
  Vector amps = Vector::Zero(1l << n);
  amps(0) = 1.0 / std::sqrt(2.0);
  amps((1l << n) - 1) = 1.0 / std::sqrt(2.0);
  return PureState(n, std::move(amps));
}

JointState atomic_w_cascade(int n) {
  if (n < 2) throw std::invalid_argument("atomic_w_cascade: n >= 2");
  int m = n;  // cavity + (n-1) atoms
  Vector amps = Vector::Zero(1l << m);
  amps(0) = 1.0;  // cavity |0>, atoms |a>

  // |a,0> <-> |b,1> rotator on the (cavity, atom) pair: in the a = 0,
  // b = 1 encoding the rotated doublet is {|00>, |11>}.
  double c = std::cos(M_PI / 4), s = std::sin(M_PI / 4);
  Matrix g = Matrix::Identity(4, 4);
  g(0, 0) = g(3, 3) = c;
  g(0, 3) = g(3, 0) = kImag * s;

  for (int k = 1; k <= n - 1; ++k)
    apply_two_qubit_gate_inplace(amps, m, 1, k + 1, g);
  return JointState(2, n - 1, std::move(amps));
}

}  // namespace seqmps
