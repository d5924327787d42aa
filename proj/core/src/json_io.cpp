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

#include "seqmps/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace seqmps {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [re, im] pair");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a vector array");
  Vector v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<long>(i)) = complex_from_json(j[i]);
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a matrix array");
  long rows = static_cast<long>(j.size());
  long cols = static_cast<long>(j[0].size());
  Matrix m(rows, cols);
  for (long r = 0; r < rows; ++r) {
    if (static_cast<long>(j[r].size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (long c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json state_to_json(const PureState& state) {
  json j;
  j["n"] = state.n_sites();
  j["dims"] = state.local_dims();
  j["amps"] = vector_to_json(state.amplitudes());
  return j;
}

PureState state_from_json(const json& j) {
  int n = j.at("n").get<int>();
  auto dims = j.at("dims").get<std::vector<int>>();
  if (static_cast<int>(dims.size()) != n)
    throw std::invalid_argument("state json: dims length != n");
  Vector amps = vector_from_json(j.at("amps"));
  return PureState(std::move(dims), std::move(amps));
}

json mps_to_json(const MatrixProductState& mps) {
  json j;
  j["n"] = mps.n_sites();
  json sites = json::array();
  for (const auto& t : mps.site_tensors())
    sites.push_back(json::array({matrix_to_json(t[0]), matrix_to_json(t[1])}));
  j["site_tensors"] = std::move(sites);
  j["phi_I"] = vector_to_json(mps.phi_I());
  j["phi_F"] = vector_to_json(mps.phi_F());
  return j;
}

MatrixProductState mps_from_json(const json& j) {
  const json& sites = j.at("site_tensors");
  std::vector<MatrixProductState::SiteTensor> tensors;
  for (const auto& s : sites) {
    if (!s.is_array() || s.size() != 2)
      throw std::invalid_argument("mps json: each site needs two blocks");
    tensors.push_back({matrix_from_json(s[0]), matrix_from_json(s[1])});
  }
  if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(tensors.size()))
    throw std::invalid_argument("mps json: n != number of site tensors");
  return MatrixProductState(std::move(tensors), vector_from_json(j.at("phi_I")),
                            vector_from_json(j.at("phi_F")));
}

json plan_to_json(const GenerationPlan& plan) {
  json j;
  j["D"] = plan.ancilla_dim;
  json steps = json::array();
  for (const auto& s : plan.steps) steps.push_back(matrix_to_json(s.matrix));
  j["steps"] = std::move(steps);
  j["phi_I"] = vector_to_json(plan.phi_I);
  j["phi_F"] = vector_to_json(plan.phi_F);
  return j;
}

GenerationPlan plan_from_json(const json& j) {
  GenerationPlan plan;
  plan.ancilla_dim = j.at("D").get<int>();
  int k = 1;
  for (const auto& s : j.at("steps"))
    plan.steps.push_back(Isometry{matrix_from_json(s), k++});
  plan.phi_I = vector_from_json(j.at("phi_I"));
  plan.phi_F = vector_from_json(j.at("phi_F"));
  return plan;
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << j.dump(1) << "\n";
}

json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open: " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path.string() + ": " +
                                e.what());
  }
  return j;
}

}  // namespace seqmps
