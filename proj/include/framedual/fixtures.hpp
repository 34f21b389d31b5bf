// Copyright 2026 The framedual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "framedual/frame.hpp"

namespace framedual {

struct Seed {
  std::uint64_t value = 0;
};

/// Name of the pinned sampling scheme used by random_frame. Bump the suffix
/// whenever the draw order or transform changes.
inline constexpr const char* kRandomScheme = "mt19937_64/box-muller/v1";

/// e_1 = sqrt(2/3)(1, 0), e_2 = sqrt(2/3)(-1/2, sqrt(3)/2),
/// e_3 = sqrt(2/3)(-1/2, -sqrt(3)/2).
ParsevalFrame mercedes();

struct SicPovm {
  Frame states;  // four unit vectors of C^2 with |<e_i, e_j>|^2 = 1/3
  Frame bloch;   // their Bloch vectors, real entries in C^3; 4/3-tight
};

SicPovm sic_povm_qubit();

/// (x, y, z) with rho = |e><e| = (I + x sx + y sy + z sz) / 2, returned as a
/// real vector. Throws NotUnit unless ||e|| = 1.
Eigen::Vector3d bloch_map(const ComplexVector& e, const Tolerance& tol = {});

/// e_j = b_j - (1/K) sum_i b_i (j <= K), e_{K+1} = K^{-1/2} sum_i b_i.
ParsevalFrame casazza_christensen_block(int k);

/// Blocks K = 1..count placed on orthogonal coordinate ranges of
/// C^{1 + 2 + ... + count}.
ParsevalFrame casazza_christensen_union(int count);

/// m vectors in C^n with i.i.d. standard complex Gaussian entries (real and
/// imaginary parts each N(0, 1/2)), drawn column by column. With `parseval`,
/// the family is mapped through S^{-1/2}. Redraws on rank deficiency.
Frame random_frame(int n, int m, Seed seed, bool parseval);

/// Same scheme for a single vector / matrix, for tests and tools.
ComplexMatrix random_gaussian_matrix(int rows, int cols, Seed seed);

}  // namespace framedual
