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

#include "framedual/duals.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace framedual {

namespace {

double spectral_scale(const HermEig& eig) {
  return eig.eigenvalues.size() == 0
             ? 1.0
             : std::max(1.0, eig.eigenvalues.cwiseAbs().maxCoeff());
}

// Eigenvalues of I - e^{-Q} above rank_tol; the threshold is absolute because
// that spectrum lies below 1 for Q >= 0.
int count_defect(const HermEig& eig, double rank_tol) {
  int r = 0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    if (std::abs(1.0 - std::exp(-eig.eigenvalues(k))) > rank_tol) ++r;
  }
  return r;
}

QAdmissibility assess_spectrum(const HermEig& eig, int excess,
                               const Tolerance& tol) {
  QAdmissibility a;
  a.excess = excess;
  a.nonnegative =
      eig.eigenvalues.minCoeff() >= -tol.rank_tol * spectral_scale(eig);
  a.rank_defect = count_defect(eig, tol.rank_tol);
  return a;
}

Frame dual_with_complement(const Frame& f, const AdmissibleQ& q,
                           const DilationUnitary& w,
                           const ComplexMatrix& complement,
                           const Tolerance& tol) {
  const auto m = static_cast<int>(complement.rows());
  if (w.n() != f.dim() || w.m() != m || q.dim() != f.dim()) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "unitary must act on C^" + std::to_string(f.dim()) +
                         " (+) C^" + std::to_string(m));
  }
  if (q.rank_defect() > m) {
    throw FrameError(ErrorCode::InadmissibleParams,
                     "rank(I - e^{-Q}) exceeds the excess");
  }
  const double mismatch = (w.w11() - q.exp_q(-0.5)).norm();
  if (mismatch > tol.residual_tol) {
    throw FrameError(ErrorCode::BlockMismatch,
                     "W11 differs from e^{-Q/2} by " +
                         std::to_string(mismatch));
  }
  if (m == 0) return Frame(f.synthesis(), tol);
  return Frame(f.synthesis() + q.exp_q(0.5) * w.w12() * complement, tol);
}

struct WeightedQ {
  ComplexMatrix q_tilde;  // e^{-Q_phi/2} Q e^{Q_phi/2}
  bool commuting = false;
};

// Q is self-adjoint for (x, y)_phi = (e^{-Q_phi} x, y) exactly when
// e^{-Q_phi/2} Q e^{Q_phi/2} is Hermitian. When Q is already Hermitian and
// commutes with Q_phi that conjugation is Q itself and is skipped.
WeightedQ weighted_q(const CanonicalFactorization& cf, const ComplexMatrix& q,
                     const Tolerance& tol) {
  const auto n = cf.q.rows();
  if (q.rows() != n || q.cols() != n) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "Q must be " + std::to_string(n) + "x" +
                         std::to_string(n));
  }
  require_finite(q, "Q");
  const double scale = std::max(1.0, q.norm());
  if (is_hermitian(q, tol) &&
      (q * cf.q - cf.q * q).norm() <=
          tol.residual_tol * scale * std::max(1.0, cf.q.norm())) {
    return {0.5 * (q + q.adjoint()), true};
  }
  const ComplexMatrix qt = cf.exp_q(-0.5) * q * cf.exp_q(0.5);
  if (hermitian_defect(qt) > tol.residual_tol * std::max(1.0, qt.norm())) {
    throw FrameError(ErrorCode::InadmissibleParams,
                     "e^{-Q_phi} Q is not self-adjoint");
  }
  return {0.5 * (qt + qt.adjoint()), false};
}

AdmissibleQ admissible_or_throw(const ComplexMatrix& q, int excess,
                                const Tolerance& tol) {
  return AdmissibleQ(q, excess, tol);
}

}  // namespace

std::string QAdmissibility::violation() const {
  if (!nonnegative) return "nonnegativity: Q has a negative eigenvalue";
  if (rank_defect > excess) {
    return "rank bound: rank(I - e^{-Q}) = " + std::to_string(rank_defect) +
           " exceeds excess " + std::to_string(excess);
  }
  return {};
}

QAdmissibility assess_q(const ComplexMatrix& q, int excess,
                        const Tolerance& tol) {
  return assess_spectrum(herm_eig(q, tol), excess, tol);
}

AdmissibleQ::AdmissibleQ(const ComplexMatrix& q, int excess,
                         const Tolerance& tol)
    : q_(q), spectrum_(herm_eig(q, tol)), rank_tol_(tol.rank_tol) {
  const QAdmissibility a = assess_spectrum(spectrum_, excess, tol);
  if (!a.ok()) throw FrameError(ErrorCode::InadmissibleParams, a.violation());
  rank_defect_ = a.rank_defect;
}

ComplexMatrix AdmissibleQ::exp_q(double t) const {
  return matrix_fn(spectrum_, [t](double x) { return std::exp(t * x); });
}

ComplexMatrix AdmissibleQ::defect_basis() const {
  ComplexMatrix basis(dim(), rank_defect_);
  Eigen::Index c = 0;
  for (Eigen::Index k = 0; k < spectrum_.eigenvalues.size(); ++k) {
    if (std::abs(1.0 - std::exp(-spectrum_.eigenvalues(k))) > rank_tol_) {
      basis.col(c++) = spectrum_.eigenvectors.col(k);
    }
  }
  return basis;
}

DilationUnitary::DilationUnitary(ComplexMatrix w, int n, const Tolerance& tol)
    : w_(std::move(w)), n_(n) {
  require_square(w_, "dilation unitary");
  if (n_ < 1 || n_ > w_.rows()) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "block size outside the unitary");
  }
  if (!is_unitary(w_, tol)) {
    throw FrameError(ErrorCode::NotIsometry, "W is not unitary");
  }
}

DilationUnitary default_dilation_unitary(
    const AdmissibleQ& q, int m,
    const std::optional<ComplexMatrix>& range_embedding,
    const Tolerance& tol) {
  const int n = q.dim();
  const int r = q.rank_defect();
  if (m < r) {
    throw FrameError(ErrorCode::ExcessTooSmall,
                     "rank(I - e^{-Q}) = " + std::to_string(r) +
                         " does not fit in C^" + std::to_string(m));
  }
  const ComplexMatrix natural = q.defect_basis();
  ComplexMatrix embed = natural;
  if (range_embedding) {
    embed = *range_embedding;
    if (embed.rows() != n || embed.cols() != r) {
      throw FrameError(ErrorCode::DimensionMismatch,
                       "range embedding must be " + std::to_string(n) + "x" +
                           std::to_string(r));
    }
    if ((embed * embed.adjoint() - natural * natural.adjoint()).norm() >
        tol.residual_tol) {
      throw FrameError(ErrorCode::InadmissibleParams,
                       "range embedding does not span R(I - e^{-Q})");
    }
  }
  const ComplexMatrix half_inv = q.exp_q(-0.5);
  const ComplexMatrix defect_sqrt = matrix_fn(q.spectrum(), [](double x) {
    return std::sqrt(std::max(0.0, 1.0 - std::exp(-x)));
  });

  ComplexMatrix w = ComplexMatrix::Identity(n + m, n + m);
  w.topLeftCorner(n, n) = half_inv;
  w.block(0, n, n, r) = defect_sqrt * embed;
  w.block(n, 0, r, n) = embed.adjoint() * defect_sqrt;
  w.block(n, n, r, r) = -(embed.adjoint() * half_inv * embed);
  return DilationUnitary(std::move(w), n, tol);
}

Frame dual_of_parseval(const ParsevalFrame& f, const AdmissibleQ& q,
                       const DilationUnitary& w, const Tolerance& tol) {
  return dual_with_complement(f, q, w, dilate(f, tol).complement, tol);
}

bool admissible_q_check(const ParsevalFrame& f, const ComplexMatrix& q,
                        const Tolerance& tol) {
  if (q.rows() != f.dim() || q.cols() != f.dim()) {
    throw FrameError(ErrorCode::DimensionMismatch, "Q has the wrong shape");
  }
  return assess_q(q, excess(f, tol), tol).ok();
}

ComplexMatrix parseval_transfer_operator(const ParsevalFrame& f,
                                         const ParsevalFrame& g) {
  if (f.dim() != g.dim() || f.size() != g.size()) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "Parseval frames differ in shape");
  }
  return g.synthesis() * f.synthesis().adjoint();
}

bool admissible_parseval_check(const ParsevalFrame& f, const ParsevalFrame& g,
                               const Tolerance& tol) {
  const ComplexMatrix t = parseval_transfer_operator(f, g);
  if (excess(f, tol) != excess(g, tol)) return false;
  if (!is_hermitian(t, tol)) return false;
  const HermEig eig = herm_eig(t, tol);
  return eig.eigenvalues.minCoeff() > tol.rank_tol;
}

// ---- excess one -----------------------------------------------------------

void ExcessOneParams::validate(const Tolerance& tol) const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw FrameError(ErrorCode::BadEpsilon,
                     "epsilon must lie in (0, 1], got " +
                         std::to_string(epsilon));
  }
  if (u.size() == 0 || !u.allFinite() ||
      std::abs(u.norm() - 1.0) > tol.residual_tol) {
    throw FrameError(ErrorCode::NotUnit, "u must be a unit vector");
  }
  if (!std::isfinite(theta) || !std::isfinite(theta_tilde)) {
    throw FrameError(ErrorCode::NonFinite, "phases must be finite");
  }
}

ComplexMatrix excess_one_T(double eps, const ComplexVector& u,
                           const Tolerance& tol) {
  ExcessOneParams{eps, u, 0.0, 0.0}.validate(tol);
  const auto k = u.size();
  return ComplexMatrix::Identity(k, k) + (eps - 1.0) * u * u.adjoint();
}

ComplexMatrix excess_one_W(double eps, const ComplexVector& u, double theta,
                           double theta_tilde, const Tolerance& tol) {
  const auto k = u.size();
  const double s = std::sqrt(1.0 - eps * eps);
  ComplexMatrix w(k + 1, k + 1);
  w.topLeftCorner(k, k) = excess_one_T(eps, u, tol);
  w.topRightCorner(k, 1) = s * std::polar(1.0, theta) * u;
  w.bottomLeftCorner(1, k) = s * std::polar(1.0, theta_tilde) * u.adjoint();
  w(k, k) = -eps * std::polar(1.0, theta + theta_tilde);
  return w;
}

Frame excess_one_dual(const ParsevalFrame& f, const ExcessOneParams& p,
                      const Tolerance& tol) {
  p.validate(tol);
  if (p.u.size() != f.dim()) {
    throw FrameError(ErrorCode::DimensionMismatch, "u must lie in C^dim");
  }
  if (excess(f, tol) != 1) {
    throw FrameError(ErrorCode::ExcessNotOne,
                     "frame has excess " + std::to_string(excess(f, tol)));
  }
  if (p.epsilon == 1.0) return Frame(f.synthesis(), tol);
  const ComplexMatrix tilde = dilate(f, tol).complement;  // 1 x |J|
  const Complex scale = std::sqrt(1.0 - p.epsilon * p.epsilon) / p.epsilon *
                        std::polar(1.0, p.theta);
  return Frame(f.synthesis() + scale * p.u * tilde, tol);
}

ExcessOneParams recover_excess_one_params(const ParsevalFrame& f,
                                          const Frame& g,
                                          const Tolerance& tol) {
  if (excess(f, tol) != 1) {
    throw FrameError(ErrorCode::ExcessNotOne,
                     "frame has excess " + std::to_string(excess(f, tol)));
  }
  const double residual = dual_residual(f, g);
  if (residual > tol.residual_tol) {
    throw FrameError(ErrorCode::NotDual,
                     "reconstruction residual " + std::to_string(residual));
  }
  const ComplexMatrix tilde = dilate(f, tol).complement;
  const ComplexMatrix diff = g.synthesis() - f.synthesis();
  // Least squares for diff = v * tilde; tilde is a unit row.
  const ComplexVector v =
      diff * tilde.adjoint() / tilde.squaredNorm();
  const double fit = (diff - v * tilde).norm();
  if (fit > tol.residual_tol) {
    throw FrameError(ErrorCode::NotRankOneDifference,
                     "rank-one fit residual " + std::to_string(fit));
  }
  ExcessOneParams p;
  const double vn = v.norm();
  if (vn <= tol.rank_tol) {
    p.epsilon = 1.0;
    p.u = ComplexVector::Unit(f.dim(), 0);
  } else {
    p.epsilon = 1.0 / std::sqrt(1.0 + vn * vn);
    p.u = v / vn;
  }
  return p;
}

// ---- near-Riesz -----------------------------------------------------------

Frame near_riesz_dual(const NearRieszDilation& d, const AdmissibleQ& q,
                      const DilationUnitary& w, const Tolerance& tol) {
  const Frame raw = dual_with_complement(d.source, q, w, d.complement(), tol);
  ComplexMatrix psi = raw.synthesis();
  const RealVector norms = psi.colwise().norm().transpose();
  const double cutoff = tol.rank_tol * std::max(1.0, norms.maxCoeff());
  for (Eigen::Index j = 0; j < psi.cols(); ++j) {
    if (norms(j) <= cutoff) psi.col(j).setZero();
  }
  return Frame(std::move(psi), tol);
}

Frame near_riesz_dual(const ParsevalFrame& f, const AdmissibleQ& q,
                      const DilationUnitary& w, const Tolerance& tol) {
  return near_riesz_dual(near_riesz_dilate(f, tol), q, w, tol);
}

NearRieszParams simplest_dual_params(const NearRieszDilation& d,
                                     const Tolerance& tol) {
  const int m = d.source.size() - d.source.dim();
  AdmissibleQ q = admissible_or_throw(-d.q0, m, tol);
  DilationUnitary w = default_dilation_unitary(q, m, d.m1_basis, tol);
  return {std::move(q), std::move(w)};
}

// ---- general frames -------------------------------------------------------

GeneralDualParams make_general_dual_params(const Frame& f,
                                           const ComplexMatrix& q,
                                           const Tolerance& tol) {
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  const WeightedQ wq = weighted_q(cf, q, tol);
  const int m = excess(f, tol);
  const AdmissibleQ aq = admissible_or_throw(wq.q_tilde, m, tol);
  return {q, default_dilation_unitary(aq, m, std::nullopt, tol)};
}

ComplexMatrix general_dual_operator(const Frame& f, const ComplexMatrix& q,
                                    const Tolerance& tol) {
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  const WeightedQ wq = weighted_q(cf, q, tol);
  const AdmissibleQ aq = admissible_or_throw(wq.q_tilde, excess(f, tol), tol);
  return cf.exp_q(-0.5) * aq.exp_q(0.5);
}

Frame general_dual(const Frame& f, const GeneralDualParams& p,
                   const Tolerance& tol) {
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  const WeightedQ wq = weighted_q(cf, p.q, tol);
  const int m = excess(f, tol);
  const AdmissibleQ aq = admissible_or_throw(wq.q_tilde, m, tol);
  if (p.w.n() != f.dim() || p.w.m() != m) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "unitary must act on C^" + std::to_string(f.dim()) +
                         " (+) C^" + std::to_string(m));
  }
  const double mismatch = (p.w.w11() - aq.exp_q(-0.5)).norm();
  if (mismatch > tol.residual_tol) {
    throw FrameError(ErrorCode::BlockMismatch,
                     "W11 differs from e^{-Q_phi/2} e^{-Q/2} e^{Q_phi/2} by " +
                         std::to_string(mismatch));
  }
  const ComplexMatrix canonical = cf.exp_q(-0.5) * cf.parseval_part.synthesis();
  if (m == 0) return Frame(canonical, tol);
  const ComplexMatrix r_q = cf.exp_q(-0.5) * aq.exp_q(0.5);
  const ComplexMatrix tilde = dilate(cf.parseval_part, tol).complement;
  return Frame(canonical + r_q * p.w.w12() * tilde, tol);
}

Frame general_dual_selfadjoint(const Frame& f, const ComplexMatrix& q,
                               const Tolerance& tol) {
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  const auto n = f.dim();
  if (q.rows() != n || q.cols() != n) {
    throw FrameError(ErrorCode::DimensionMismatch, "Q has the wrong shape");
  }
  if (!is_hermitian(q, tol)) {
    throw FrameError(ErrorCode::InadmissibleParams, "Q is not self-adjoint");
  }
  const double commutator = (q * cf.q - cf.q * q).norm();
  if (commutator > tol.residual_tol * std::max(1.0, q.norm()) *
                       std::max(1.0, cf.q.norm())) {
    throw FrameError(ErrorCode::NonCommuting,
                     "||[Q, Q_phi]||_F = " + std::to_string(commutator));
  }
  const ComplexMatrix q_sym = 0.5 * (q + q.adjoint());
  const int m = excess(f, tol);
  const AdmissibleQ aq = admissible_or_throw(q_sym, m, tol);
  const DilationUnitary w = default_dilation_unitary(aq, m, std::nullopt, tol);
  const Dilation dil = dilate(cf.parseval_part, tol);
  ComplexMatrix pf = aq.exp_q(-0.5) * cf.parseval_part.synthesis();
  if (m > 0) pf += w.w12() * dil.complement;
  const ComplexMatrix shift = matrix_exp(0.5 * (q_sym - cf.q), tol);
  return Frame(shift * pf, tol);
}

PolarForm polar_form(const Frame& f, const GeneralDualParams& p,
                     const Tolerance& tol) {
  const ComplexMatrix r_q = general_dual_operator(f, p.q, tol);
  const PolarFactors polar = polar_decompose(r_q, tol);
  const Frame dual = general_dual(f, p, tol);
  return {2.0 * matrix_log(polar.positive, tol),
          canonical_factorization(dual, tol).parseval_part, polar.unitary};
}

QAdmissibility tight_dual_check(const Frame& f, double a,
                                const Tolerance& tol) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    throw FrameError(ErrorCode::InadmissibleParams, "A must be positive");
  }
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  const auto n = f.dim();
  const ComplexMatrix q = cf.q + std::log(a) * ComplexMatrix::Identity(n, n);
  return assess_q(q, excess(f, tol), tol);
}

bool tight_dual_exists(const Frame& f, double a, const Tolerance& tol) {
  return tight_dual_check(f, a, tol).ok();
}

Frame tight_dual(const Frame& f, double a, const Tolerance& tol) {
  const QAdmissibility check = tight_dual_check(f, a, tol);
  if (!check.ok()) {
    throw FrameError(ErrorCode::InadmissibleParams,
                     "no " + std::to_string(a) + "-tight dual: " +
                         check.violation());
  }
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  const auto n = f.dim();
  return general_dual_selfadjoint(
      f, cf.q + std::log(a) * ComplexMatrix::Identity(n, n), tol);
}

// ---- classical construction ----------------------------------------------

Frame oracle_dual_bessel(const Frame& f, const ComplexMatrix& h,
                         const Tolerance& tol) {
  if (h.rows() != f.dim() || h.cols() != f.size()) {
    throw FrameError(ErrorCode::DimensionMismatch,
                     "H must hold |J| vectors of C^dim");
  }
  require_finite(h, "H");
  const ComplexMatrix& phi = f.synthesis();
  const ComplexMatrix s_inv_phi = frame_operator(f).llt().solve(phi);
  const auto m = f.size();
  const ComplexMatrix mix =
      ComplexMatrix::Identity(m, m) - phi.adjoint() * s_inv_phi;
  return Frame(s_inv_phi + h * mix, tol);
}

}  // namespace framedual
