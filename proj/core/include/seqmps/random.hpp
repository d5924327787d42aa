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

#include <cstdint>
#include <random>

#include "seqmps/mps.hpp"
#include "seqmps/pure_state.hpp"
#include "seqmps/types.hpp"

namespace seqmps {

inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Seeded mt19937_64 stream; all randomized ensembles in the library and
/// the CLI draw from this generator so runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  double gauss() { return normal_(engine_); }
  Complex cgauss() { return Complex(gauss(), gauss()) / std::sqrt(2.0); }
  double uniform() { return uniform_(engine_); }
  std::uint64_t integer(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

Matrix random_gaussian(long rows, long cols, Rng& rng);

/// Haar-random unitary (QR of a Gaussian matrix with phase-fixed R).
Matrix random_unitary(long dim, Rng& rng);

/// rows x cols matrix with orthonormal columns (rows >= cols).
Matrix random_isometry(long rows, long cols, Rng& rng);

/// Haar-ish random state vector, normalized.
PureState random_state(int n_sites, Rng& rng);

/// Random MPS with every bond (including the boundaries) of dimension D;
/// the site tensors are arbitrary Gaussian maps, not isometries.
MatrixProductState random_mps(int n_sites, int bond_dim, Rng& rng);

/// Well-conditioned random invertible matrix (singular values in [0.5, 2]).
Matrix random_invertible(long dim, Rng& rng);

}  // namespace seqmps
