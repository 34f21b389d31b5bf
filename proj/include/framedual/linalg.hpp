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

#include <complex>
#include <functional>
#include <string_view>

#include <Eigen/Dense>

#include "framedual/errors.hpp"

namespace framedual {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Numerical thresholds shared by every module.
///
/// `rank_tol` is relative: a singular value or eigenvalue counts as zero when
/// it is at most `rank_tol` times the largest one. `residual_tol` bounds the
/// Frobenius norm of verification residuals such as ||S - I||_F.
struct Tolerance {
  double rank_tol = 1e-10;
  double residual_tol = 1e-9;

  /// Throws InadmissibleParams unless both values lie in (0, 1).
  void validate() const;
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascend; every
/// eigenvector has its largest-magnitude entry real and positive (lowest
/// index wins among equal magnitudes).
struct HermEig {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

struct PolarFactors {
  ComplexMatrix positive;  // sqrt(A A^*)
  ComplexMatrix unitary;
};

void require_square(const ComplexMatrix& a, std::string_view what);
void require_finite(const ComplexMatrix& a, std::string_view what);

/// ||A - A^*||_F.
double hermitian_defect(const ComplexMatrix& a);

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol = {});

HermEig herm_eig(const ComplexMatrix& a, const Tolerance& tol = {});

/// V diag(f(lambda)) V^* for Hermitian A. Throws DomainError when f yields a
/// non-finite value on some eigenvalue.
ComplexMatrix matrix_fn(const ComplexMatrix& a,
                        const std::function<double(double)>& f,
                        const Tolerance& tol = {});

/// Same as above on an existing decomposition.
ComplexMatrix matrix_fn(const HermEig& eig,
                        const std::function<double(double)>& f);

ComplexMatrix matrix_exp(const ComplexMatrix& a, const Tolerance& tol = {});

// The following reject spectra outside the function's domain instead of
// clamping: log and x^{-1/2} need every eigenvalue above rank_tol * lambda_max,
// sqrt needs every eigenvalue above -rank_tol * max|lambda| (tiny negative
// values within that band are read as zero).
ComplexMatrix matrix_log(const ComplexMatrix& a, const Tolerance& tol = {});
ComplexMatrix matrix_sqrt(const ComplexMatrix& a, const Tolerance& tol = {});
ComplexMatrix matrix_inv_sqrt(const ComplexMatrix& a,
                              const Tolerance& tol = {});

int rank_of(const ComplexMatrix& a, const Tolerance& tol = {});

/// Columns completing the orthonormal columns of `b` to a unitary
/// [b | result]. Deterministic: the identity's columns are orthogonalized
/// against b by repeatedly taking the one with the largest residual norm.
ComplexMatrix orthonormal_complement(const ComplexMatrix& b, int ambient_dim,
                                     const Tolerance& tol = {});

/// A = P U with P positive definite and U unitary. Throws Singular.
PolarFactors polar_decompose(const ComplexMatrix& a, const Tolerance& tol = {});

bool is_unitary(const ComplexMatrix& a, const Tolerance& tol = {});

/// Index of the largest value in `values`, treating entries within a relative
/// 1e-12 band of the maximum as tied and returning the lowest such index.
Eigen::Index pivot_index(const RealVector& values);

}  // namespace framedual
