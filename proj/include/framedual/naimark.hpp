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

#include <vector>

#include "framedual/frame.hpp"

namespace framedual {

/// Extension of a Parseval frame {e_j} in C^n to an orthonormal basis
/// {e_j (+) ~e_j} of C^n (+) C^m, m = excess.
struct Dilation {
  ParsevalFrame source;
  /// m x |J|; column j is ~e_j.
  ComplexMatrix complement;
  /// |J| x |J| unitary; column j is e_j stacked over ~e_j.
  ComplexMatrix onb;

  int excess_dim() const { return static_cast<int>(complement.rows()); }
};

/// Dilation of a Parseval frame built around a Riesz basis subset J0.
///
/// Coordinates of the dilation space are ordered K, M1, M2. M1 is the range
/// of I - e^{Q0} inside K; its vectors are stored in the coordinates of the
/// orthonormal columns `m1_basis`.
struct NearRieszDilation {
  ParsevalFrame source;
  std::vector<int> j0;
  std::vector<int> j1;
  /// log of the frame operator of {e_j : j in J0}; negative semidefinite.
  ComplexMatrix q0;
  /// n x dim M1, eigenvectors of I - e^{Q0} with nonzero eigenvalue.
  ComplexMatrix m1_basis;
  /// Eigenvalues of I - e^{Q0} matching the columns of m1_basis.
  RealVector m1_spectrum;
  int m2_dim = 0;
  /// m2_dim x |J1|; column k is ~e^2 for j1[k].
  ComplexMatrix complement2;
  /// (n + dim M1) x |J1|; column k is p_{j1[k]}.
  ComplexMatrix p_vectors;
  /// |J| x |J| unitary; column j is e_j (+) ~e^1_j (+) ~e^2_j.
  ComplexMatrix onb;

  int m1_dim() const { return static_cast<int>(m1_basis.cols()); }
  /// Rows n.. of `onb`: the M1 (+) M2 components, one column per index.
  ComplexMatrix complement() const;
};

Dilation dilate(const ParsevalFrame& f, const Tolerance& tol = {});

/// Indices of n linearly independent vectors, chosen by greedy pivoting on
/// the largest residual norm (lowest index on ties); returned ascending.
std::vector<int> riesz_subset(const Frame& f, const Tolerance& tol = {});

NearRieszDilation near_riesz_dilate(const ParsevalFrame& f,
                                    const Tolerance& tol = {});

/// Residuals of the structural identities behind the near-Riesz dilation.
struct AppendixReport {
  double frame_operator_residual = 0.0;  // S_1 vs I - e^{Q0}
  double range_residual = 0.0;           // proj(span J1) vs proj(M1)
  double p_parseval_residual = 0.0;      // {p_j} frame operator vs proj(L1)
  double orthonormal_residual = 0.0;     // Gram of the J0 columns vs I
  double cross_residual = 0.0;           // max |<e_j, p_k>|
  double q0_max_eigenvalue = 0.0;
  int p_excess = 0;
  bool excess_matches = false;

  bool ok(const Tolerance& tol) const;
};

AppendixReport appendix_report(const NearRieszDilation& d,
                               const Tolerance& tol = {});
bool check_appendix_lemmas(const NearRieszDilation& d,
                           const Tolerance& tol = {});

}  // namespace framedual
