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

#include "framedual/naimark.hpp"

#include <algorithm>
#include <cmath>

namespace framedual {

namespace {

ComplexMatrix select_columns(const ComplexMatrix& m,
                             const std::vector<int>& idx) {
  ComplexMatrix out(m.rows(), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t k = 0; k < idx.size(); ++k) {
    out.col(static_cast<Eigen::Index>(k)) = m.col(idx[k]);
  }
  return out;
}

// Orthogonal projector onto the column space of `m`.
ComplexMatrix range_projector(const ComplexMatrix& m, const Tolerance& tol) {
  const auto rows = m.rows();
  if (m.cols() == 0) return ComplexMatrix::Zero(rows, rows);
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU);
  const int r = rank_of(m, tol);
  const ComplexMatrix u = svd.matrixU().leftCols(r);
  return u * u.adjoint();
}

}  // namespace

ComplexMatrix NearRieszDilation::complement() const {
  return onb.bottomRows(onb.rows() - source.dim());
}

Dilation dilate(const ParsevalFrame& f, const Tolerance& tol) {
  const int m = f.size();
  // Analysis matrix: orthonormal columns because S = I.
  const ComplexMatrix theta = f.synthesis().adjoint();
  const ComplexMatrix completion = orthonormal_complement(theta, m, tol);
  Dilation d{f, completion.adjoint(), ComplexMatrix(m, m)};
  d.onb.topRows(f.dim()) = f.synthesis();
  d.onb.bottomRows(m - f.dim()) = d.complement;
  return d;
}

std::vector<int> riesz_subset(const Frame& f, const Tolerance& tol) {
  (void)tol;
  const int n = f.dim();
  ComplexMatrix residual = f.synthesis();
  std::vector<bool> taken(static_cast<std::size_t>(f.size()), false);
  std::vector<int> picked;
  ComplexMatrix basis(n, n);
  for (int step = 0; step < n; ++step) {
    RealVector norms = residual.colwise().norm().transpose();
    for (int j = 0; j < f.size(); ++j) {
      if (taken[static_cast<std::size_t>(j)]) norms(j) = -1.0;
    }
    const auto p = static_cast<int>(pivot_index(norms));
    taken[static_cast<std::size_t>(p)] = true;
    picked.push_back(p);
    ComplexVector q = residual.col(p);
    for (int pass = 0; pass < 2 && step > 0; ++pass) {
      const auto prev = basis.leftCols(step);
      q -= prev * (prev.adjoint() * q);
    }
    q.normalize();
    basis.col(step) = q;
    residual -= q * (q.adjoint() * residual);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

NearRieszDilation near_riesz_dilate(const ParsevalFrame& f,
                                    const Tolerance& tol) {
  const int n = f.dim();
  const int m = f.size();
  NearRieszDilation d{f, riesz_subset(f, tol), {}, {}, {}, {}, 0, {}, {}, {}};
  for (int j = 0, k = 0; j < m; ++j) {
    if (k < n && d.j0[static_cast<std::size_t>(k)] == j) {
      ++k;
    } else {
      d.j1.push_back(j);
    }
  }
  const ComplexMatrix phi0 = select_columns(f.synthesis(), d.j0);
  const ComplexMatrix phi1 = select_columns(f.synthesis(), d.j1);

  // S0 = e^{Q0} has spectrum in (0, 1]; I - e^{Q0} shares its eigenvectors.
  const HermEig s0 = herm_eig(phi0 * phi0.adjoint(), tol);
  if (s0.eigenvalues(0) <= tol.rank_tol * s0.eigenvalues(n - 1)) {
    throw FrameError(ErrorCode::NotAFrame, "selected subset is not a basis");
  }
  d.q0 = matrix_fn(s0, [](double x) { return std::log(x); });

  std::vector<int> m1_cols;
  for (int k = 0; k < n; ++k) {
    if (1.0 - s0.eigenvalues(k) > tol.rank_tol) m1_cols.push_back(k);
  }
  const auto d1 = static_cast<Eigen::Index>(m1_cols.size());
  d.m1_basis = select_columns(s0.eigenvectors, m1_cols);
  d.m1_spectrum.resize(d1);
  for (Eigen::Index k = 0; k < d1; ++k) {
    d.m1_spectrum(k) = 1.0 - s0.eigenvalues(m1_cols[static_cast<std::size_t>(k)]);
  }
  const RealVector& mu = d.m1_spectrum;

  // (e^{-Q0} - I)^{+1/2} and its inverse restricted to M1, both written in
  // m1_basis coordinates.
  const RealVector up = (mu.array() / (1.0 - mu.array())).sqrt().matrix();
  const RealVector down = ((1.0 - mu.array()) / mu.array()).sqrt().matrix();

  const auto h1 = n + d1;
  ComplexMatrix e0_cols(h1, phi0.cols());
  e0_cols.topRows(n) = phi0;
  e0_cols.bottomRows(d1) =
      up.cast<Complex>().asDiagonal() * (d.m1_basis.adjoint() * phi0);
  d.p_vectors.resize(h1, phi1.cols());
  d.p_vectors.topRows(n) = phi1;
  d.p_vectors.bottomRows(d1) =
      -(down.cast<Complex>().asDiagonal() * (d.m1_basis.adjoint() * phi1));

  const auto n1 = static_cast<int>(d.j1.size());
  if (d1 == 0) {
    // {p_j} lives in the zero space; its dilation is any ONB of C^{|J1|}.
    d.complement2 = ComplexMatrix::Identity(n1, n1);
  } else {
    // Orthonormal basis of L1 = {-(e^{-Q0}-I)^{1/2} r (+) r : r in M1}.
    ComplexMatrix l1(h1, d1);
    l1.topRows(n) = -(d.m1_basis * mu.array().sqrt().matrix().cast<Complex>().asDiagonal());
    l1.bottomRows(d1) =
        (1.0 - mu.array()).sqrt().matrix().cast<Complex>().asDiagonal();
    const ParsevalFrame p_coords(l1.adjoint() * d.p_vectors, tol);
    d.complement2 = dilate(p_coords, tol).complement;
  }
  d.m2_dim = static_cast<int>(d.complement2.rows());

  d.onb = ComplexMatrix::Zero(m, m);
  for (int k = 0; k < n; ++k) {
    d.onb.col(d.j0[static_cast<std::size_t>(k)]).head(h1) = e0_cols.col(k);
  }
  for (int k = 0; k < n1; ++k) {
    auto col = d.onb.col(d.j1[static_cast<std::size_t>(k)]);
    col.head(h1) = d.p_vectors.col(k);
    col.tail(d.m2_dim) = d.complement2.col(k);
  }
  return d;
}

bool AppendixReport::ok(const Tolerance& tol) const {
  const double t = tol.residual_tol;
  return frame_operator_residual <= t && range_residual <= t &&
         p_parseval_residual <= t && orthonormal_residual <= t &&
         cross_residual <= t && q0_max_eigenvalue <= t && excess_matches;
}

AppendixReport appendix_report(const NearRieszDilation& d,
                               const Tolerance& tol) {
  AppendixReport r;
  const int n = d.source.dim();
  const auto h1 = n + d.m1_dim();
  const ComplexMatrix phi1 = select_columns(d.source.synthesis(), d.j1);
  const ComplexMatrix id_n = ComplexMatrix::Identity(n, n);

  const ComplexMatrix exp_q0 = matrix_exp(d.q0, tol);
  r.frame_operator_residual =
      (phi1 * phi1.adjoint() - (id_n - exp_q0)).norm();
  r.range_residual = (range_projector(phi1, tol) -
                      d.m1_basis * d.m1_basis.adjoint())
                         .norm();
  r.q0_max_eigenvalue = herm_eig(d.q0, tol).eigenvalues.maxCoeff();

  ComplexMatrix e0(h1, static_cast<Eigen::Index>(d.j0.size()));
  for (std::size_t k = 0; k < d.j0.size(); ++k) {
    e0.col(static_cast<Eigen::Index>(k)) = d.onb.col(d.j0[k]).head(h1);
  }
  const auto k0 = e0.cols();
  r.orthonormal_residual =
      (e0.adjoint() * e0 - ComplexMatrix::Identity(k0, k0)).norm();

  const ComplexMatrix& p = d.p_vectors;
  const ComplexMatrix l1_projector =
      ComplexMatrix::Identity(h1, h1) - e0 * e0.adjoint();
  r.p_parseval_residual = (p * p.adjoint() - l1_projector).norm();
  r.cross_residual =
      p.cols() == 0 ? 0.0 : (e0.adjoint() * p).cwiseAbs().maxCoeff();
  r.p_excess = static_cast<int>(p.cols()) - rank_of(p, tol);
  r.excess_matches =
      r.p_excess == static_cast<int>(d.j1.size()) - d.m1_dim() &&
      r.p_excess == d.m2_dim;
  return r;
}

bool check_appendix_lemmas(const NearRieszDilation& d, const Tolerance& tol) {
  return appendix_report(d, tol).ok(tol);
}

}  // namespace framedual
