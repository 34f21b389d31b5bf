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

#include "framedual/frame.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace framedual {

Frame::Frame(ComplexMatrix synthesis, const Tolerance& tol)
    : vectors_(std::move(synthesis)) {
  if (vectors_.rows() < 1 || vectors_.cols() < vectors_.rows()) {
    throw FrameError(ErrorCode::NotAFrame,
                     "need at least dim vectors, got " +
                         std::to_string(vectors_.cols()) + " in C^" +
                         std::to_string(vectors_.rows()));
  }
  require_finite(vectors_, "frame vectors");
  const int r = rank_of(vectors_, tol);
  if (r != vectors_.rows()) {
    throw FrameError(ErrorCode::NotAFrame,
                     "vectors span a subspace of dimension " +
                         std::to_string(r) + " < " +
                         std::to_string(vectors_.rows()));
  }
}

Frame Frame::from_vectors(const std::vector<ComplexVector>& vectors,
                          const Tolerance& tol) {
  if (vectors.empty()) {
    throw FrameError(ErrorCode::NotAFrame, "empty family");
  }
  const Eigen::Index n = vectors.front().size();
  ComplexMatrix m(n, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != n) {
      throw FrameError(ErrorCode::DimensionMismatch,
                       "vector " + std::to_string(j) + " has length " +
                           std::to_string(vectors[j].size()));
    }
    m.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return Frame(std::move(m), tol);
}

ParsevalFrame::ParsevalFrame(Frame frame, const Tolerance& tol)
    : Frame(std::move(frame)) {
  const auto n = dim();
  residual_ =
      (frame_operator(*this) - ComplexMatrix::Identity(n, n)).norm();
  if (residual_ > tol.residual_tol) {
    throw FrameError(ErrorCode::NotParseval,
                     "||S - I||_F = " + std::to_string(residual_));
  }
}

ComplexMatrix CanonicalFactorization::exp_q(double t) const {
  return matrix_fn(spectrum, [t](double x) { return std::pow(x, t); });
}

ComplexMatrix frame_operator(const Frame& f) {
  const ComplexMatrix& phi = f.synthesis();
  return phi * phi.adjoint();
}

FrameBounds frame_bounds(const Frame& f, const Tolerance& tol) {
  const HermEig eig = herm_eig(frame_operator(f), tol);
  return {eig.eigenvalues(0), eig.eigenvalues(eig.eigenvalues.size() - 1)};
}

double frame_potential(const Frame& f) {
  const ComplexMatrix gram = f.synthesis().adjoint() * f.synthesis();
  double total = 0.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      total += std::norm(gram(i, j));
    }
  }
  return total;
}

int excess(const Frame& f, const Tolerance& tol) {
  return f.size() - rank_of(f.synthesis(), tol);
}

bool is_parseval(const Frame& f, const Tolerance& tol) {
  const auto n = f.dim();
  return (frame_operator(f) - ComplexMatrix::Identity(n, n)).norm() <=
         tol.residual_tol;
}

ComplexVector analysis(const Frame& f, const ComplexVector& x) {
  if (x.size() != f.dim()) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "analysis input has length " + std::to_string(x.size()));
  }
  return f.synthesis().adjoint() * x;
}

ComplexVector synthesis(const Frame& f, const ComplexVector& c) {
  if (c.size() != f.size()) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "expected " + std::to_string(f.size()) +
                         " coefficients, got " + std::to_string(c.size()));
  }
  return f.synthesis() * c;
}

CanonicalFactorization canonical_factorization(const Frame& f,
                                               const Tolerance& tol) {
  HermEig spectrum = herm_eig(frame_operator(f), tol);
  const double top = spectrum.eigenvalues.maxCoeff();
  if (spectrum.eigenvalues.minCoeff() <= tol.rank_tol * top) {
    throw FrameError(ErrorCode::DomainError,
                     "frame operator is numerically singular");
  }
  ComplexMatrix q =
      matrix_fn(spectrum, [](double x) { return std::log(x); });
  const ComplexMatrix inv_sqrt =
      matrix_fn(spectrum, [](double x) { return 1.0 / std::sqrt(x); });
  ParsevalFrame parseval(Frame(inv_sqrt * f.synthesis(), tol), tol);
  return {std::move(q), std::move(parseval), std::move(spectrum)};
}

Frame canonical_dual(const Frame& f, const Tolerance& tol) {
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  return Frame(cf.exp_q(-0.5) * cf.parseval_part.synthesis(), tol);
}

double dual_residual(const Frame& f, const Frame& g) {
  if (f.dim() != g.dim() || f.size() != g.size()) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "dual candidate shape differs from the frame");
  }
  const auto n = f.dim();
  return (f.synthesis() * g.synthesis().adjoint() -
          ComplexMatrix::Identity(n, n))
      .norm();
}

bool verify_dual(const Frame& f, const Frame& g, const Tolerance& tol) {
  return dual_residual(f, g) <= tol.residual_tol;
}

}  // namespace framedual
