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

#include "framedual/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace framedual {

namespace {

constexpr double kTieBand = 1e-12;

ComplexMatrix reassemble(const ComplexMatrix& v, const RealVector& values) {
  return v * values.cast<Complex>().asDiagonal() * v.adjoint();
}

// Applies f on the spectrum after checking every eigenvalue against the
// domain predicate.
template <typename Pred>
ComplexMatrix spectral_map(const ComplexMatrix& a, const Tolerance& tol,
                           std::string_view name, Pred in_domain,
                           const std::function<double(double)>& f) {
  const HermEig eig = herm_eig(a, tol);
  const double scale = eig.eigenvalues.size() == 0
                           ? 0.0
                           : eig.eigenvalues.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    if (!in_domain(eig.eigenvalues(i), scale)) {
      throw FrameError(ErrorCode::DomainError,
                       std::string(name) + " undefined at eigenvalue " +
                           std::to_string(eig.eigenvalues(i)));
    }
  }
  return matrix_fn(eig, f);
}

}  // namespace

void Tolerance::validate() const {
  const auto ok = [](double t) { return t > 0.0 && t < 1.0; };
  if (!ok(rank_tol) || !ok(residual_tol)) {
    throw FrameError(ErrorCode::InadmissibleParams,
                     "tolerances must lie in (0, 1)");
  }
}

void require_square(const ComplexMatrix& a, std::string_view what) {
  if (a.rows() != a.cols()) {
    throw FrameError(ErrorCode::NotSquare,
                     std::string(what) + " is " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()));
  }
}

void require_finite(const ComplexMatrix& a, std::string_view what) {
  if (!a.allFinite()) {
    throw FrameError(ErrorCode::NonFinite,
                     std::string(what) + " has non-finite entries");
  }
}

double hermitian_defect(const ComplexMatrix& a) {
  return (a - a.adjoint()).norm();
}

bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol) {
  return a.rows() == a.cols() &&
         hermitian_defect(a) <= tol.residual_tol * std::max(1.0, a.norm());
}

Eigen::Index pivot_index(const RealVector& values) {
  if (values.size() == 0) return -1;
  const double best = values.maxCoeff();
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values(i) >= best - kTieBand * std::abs(best)) return i;
  }
  return 0;
}

HermEig herm_eig(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "herm_eig input");
  require_finite(a, "herm_eig input");
  const double defect = hermitian_defect(a);
  if (defect > tol.residual_tol * a.norm()) {
    throw FrameError(ErrorCode::NotHermitian,
                     "asymmetry " + std::to_string(defect));
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw FrameError(ErrorCode::DomainError, "eigensolver did not converge");
  }
  HermEig out{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < out.eigenvectors.cols(); ++c) {
    auto col = out.eigenvectors.col(c);
    const Eigen::Index p = pivot_index(col.cwiseAbs());
    const Complex lead = col(p);
    col *= std::conj(lead) / std::abs(lead);
    col(p) = Complex(std::abs(col(p)), 0.0);
  }
  return out;
}

ComplexMatrix matrix_fn(const HermEig& eig,
                        const std::function<double(double)>& f) {
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) {
    mapped(i) = f(eig.eigenvalues(i));
    if (!std::isfinite(mapped(i))) {
      throw FrameError(ErrorCode::DomainError,
                       "function undefined at eigenvalue " +
                           std::to_string(eig.eigenvalues(i)));
    }
  }
  return reassemble(eig.eigenvectors, mapped);
}

ComplexMatrix matrix_fn(const ComplexMatrix& a,
                        const std::function<double(double)>& f,
                        const Tolerance& tol) {
  return matrix_fn(herm_eig(a, tol), f);
}

ComplexMatrix matrix_exp(const ComplexMatrix& a, const Tolerance& tol) {
  return matrix_fn(a, [](double x) { return std::exp(x); }, tol);
}

ComplexMatrix matrix_log(const ComplexMatrix& a, const Tolerance& tol) {
  return spectral_map(
      a, tol, "log",
      [&](double x, double scale) {
        return scale > 0.0 && x > tol.rank_tol * scale;
      },
      [](double x) { return std::log(x); });
}

ComplexMatrix matrix_sqrt(const ComplexMatrix& a, const Tolerance& tol) {
  return spectral_map(
      a, tol, "sqrt",
      [&](double x, double scale) { return x >= -tol.rank_tol * scale; },
      [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

ComplexMatrix matrix_inv_sqrt(const ComplexMatrix& a, const Tolerance& tol) {
  return spectral_map(
      a, tol, "inverse square root",
      [&](double x, double scale) {
        return scale > 0.0 && x > tol.rank_tol * scale;
      },
      [](double x) { return 1.0 / std::sqrt(x); });
}

int rank_of(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const RealVector& s = svd.singularValues();
  const double top = s.size() == 0 ? 0.0 : s(0);
  if (top == 0.0) return 0;
  return static_cast<int>((s.array() > tol.rank_tol * top).count());
}

ComplexMatrix orthonormal_complement(const ComplexMatrix& b, int ambient_dim,
                                     const Tolerance& tol) {
  if (b.rows() != ambient_dim || b.cols() > ambient_dim) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "basis shape does not fit the ambient dimension");
  }
  const Eigen::Index k = b.cols();
  const ComplexMatrix gram = b.adjoint() * b;
  if ((gram - ComplexMatrix::Identity(k, k)).norm() > tol.residual_tol) {
    throw FrameError(ErrorCode::NotIsometry,
                     "columns are not orthonormal");
  }
  const Eigen::Index d = ambient_dim;
  ComplexMatrix found(d, d - k);
  ComplexMatrix residual =
      ComplexMatrix::Identity(d, d) - b * b.adjoint();
  for (Eigen::Index step = 0; step < d - k; ++step) {
    const Eigen::Index p = pivot_index(residual.colwise().norm().transpose());
    ComplexVector q = residual.col(p);
    // Two passes of Gram-Schmidt against everything accepted so far.
    for (int pass = 0; pass < 2; ++pass) {
      q -= b * (b.adjoint() * q);
      if (step > 0) {
        const auto prev = found.leftCols(step);
        q -= prev * (prev.adjoint() * q);
      }
    }
    q.normalize();
    found.col(step) = q;
    residual -= q * (q.adjoint() * residual);
  }
  return found;
}

PolarFactors polar_decompose(const ComplexMatrix& a, const Tolerance& tol) {
  require_square(a, "polar_decompose input");
  require_finite(a, "polar_decompose input");
  Eigen::JacobiSVD<ComplexMatrix> svd(a,
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  if (s.size() == 0 || s(s.size() - 1) <= tol.rank_tol * s(0)) {
    throw FrameError(ErrorCode::Singular, "polar factor needs an invertible input");
  }
  const ComplexMatrix& u = svd.matrixU();
  PolarFactors out;
  out.positive = reassemble(u, s);
  out.unitary = u * svd.matrixV().adjoint();
  return out;
}

bool is_unitary(const ComplexMatrix& a, const Tolerance& tol) {
  if (a.rows() != a.cols()) return false;
  const auto n = a.rows();
  return (a.adjoint() * a - ComplexMatrix::Identity(n, n)).norm() <=
         tol.residual_tol;
}

}  // namespace framedual
