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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "seqmps/mps.hpp"
#include "seqmps/plan.hpp"
#include "seqmps/pure_state.hpp"

namespace seqmps {

// File schemas. Complex numbers are [re, im] pairs; matrices are nested
// row arrays. Amplitudes are in artifact index order (site 1 slowest).
//
//   state: {"n": int, "dims": [int...], "amps": [[re,im]...]}
//   mps:   {"n": int, "site_tensors": [[A0, A1]...], "phi_I": ..., "phi_F": ...}
//   plan:  {"D": int, "steps": [matrix...], "phi_I": ..., "phi_F": ...}
//
// Entries are serialized at full double precision (shortest round-trip
// representation), so nothing below 1e-15 is lost.

nlohmann::json state_to_json(const PureState& state);
PureState state_from_json(const nlohmann::json& j);

nlohmann::json mps_to_json(const MatrixProductState& mps);
MatrixProductState mps_from_json(const nlohmann::json& j);

nlohmann::json plan_to_json(const GenerationPlan& plan);
GenerationPlan plan_from_json(const nlohmann::json& j);

nlohmann::json complex_to_json(const Complex& z);
nlohmann::json vector_to_json(const Vector& v);
nlohmann::json matrix_to_json(const Matrix& m);
Complex complex_from_json(const nlohmann::json& j);
Vector vector_from_json(const nlohmann::json& j);
Matrix matrix_from_json(const nlohmann::json& j);

void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json load_json_file(const std::filesystem::path& path);

}  // namespace seqmps
