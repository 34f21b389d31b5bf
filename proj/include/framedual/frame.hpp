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

#include "framedual/linalg.hpp"

namespace framedual {

/// A finite frame {phi_j} in C^n, stored as the n x |J| synthesis matrix whose
/// j-th column is phi_j. Construction checks that the vectors span C^n; zero
/// vectors are allowed. Immutable once built.
class Frame {
 public:
  explicit Frame(ComplexMatrix synthesis, const Tolerance& tol = {});

  static Frame from_vectors(const std::vector<ComplexVector>& vectors,
                            const Tolerance& tol = {});

  int dim() const { return static_cast<int>(vectors_.rows()); }
  int size() const { return static_cast<int>(vectors_.cols()); }
  const ComplexMatrix& synthesis() const { return vectors_; }
  ComplexVector vector(int j) const { return vectors_.col(j); }

 private:
  ComplexMatrix vectors_;
};

/// A frame whose frame operator is the identity. `parseval_residual()` keeps
/// the measured ||S - I||_F from construction.
class ParsevalFrame : public Frame {
 public:
  explicit ParsevalFrame(Frame frame, const Tolerance& tol = {});
  explicit ParsevalFrame(ComplexMatrix synthesis, const Tolerance& tol = {})
      : ParsevalFrame(Frame(std::move(synthesis), tol), tol) {}

  double parseval_residual() const { return residual_; }

 private:
  double residual_ = 0.0;
};

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;

  bool tight(const Tolerance& tol = {}) const {
    return upper - lower <= tol.residual_tol * upper;
  }
};

/// F = e^{Q/2} F_e with Q = log S and F_e = S^{-1/2} F Parseval. The
/// eigendecomposition of S is kept so that every power e^{tQ} = S^t reuses
/// the same spectral data.
struct CanonicalFactorization {
  ComplexMatrix q;
  ParsevalFrame parseval_part;
  HermEig spectrum;

  /// S^t, i.e. e^{tQ}.
  ComplexMatrix exp_q(double t) const;
};

ComplexMatrix frame_operator(const Frame& f);
FrameBounds frame_bounds(const Frame& f, const Tolerance& tol = {});

/// sum_{i,j} |<phi_i, phi_j>|^2 evaluated as a double sum over the Gram matrix.
double frame_potential(const Frame& f);

int excess(const Frame& f, const Tolerance& tol = {});

bool is_parseval(const Frame& f, const Tolerance& tol = {});

/// c_j = <x, phi_j> (inner product linear in the first slot).
ComplexVector analysis(const Frame& f, const ComplexVector& x);
ComplexVector synthesis(const Frame& f, const ComplexVector& c);

CanonicalFactorization canonical_factorization(const Frame& f,
                                               const Tolerance& tol = {});
Frame canonical_dual(const Frame& f, const Tolerance& tol = {});

/// ||sum_j phi_j psi_j^* - I||_F; both families must share dim and size.
double dual_residual(const Frame& f, const Frame& g);
bool verify_dual(const Frame& f, const Frame& g, const Tolerance& tol = {});

}  // namespace framedual
