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

#include <optional>
#include <string>

#include "framedual/frame.hpp"
#include "framedual/naimark.hpp"

namespace framedual {

/// Outcome of testing a Hermitian Q against the two admissibility
/// conditions: Q >= 0 and rank(I - e^{-Q}) <= excess.
struct QAdmissibility {
  bool nonnegative = false;
  int rank_defect = 0;
  int excess = 0;

  bool ok() const { return nonnegative && rank_defect <= excess; }
  /// Names the first violated condition; empty when ok().
  std::string violation() const;
};

QAdmissibility assess_q(const ComplexMatrix& q, int excess,
                        const Tolerance& tol = {});

/// A nonnegative Hermitian Q with rank(I - e^{-Q}) within the excess budget.
/// rank_defect counts eigenvalues of I - e^{-Q} above rank_tol.
class AdmissibleQ {
 public:
  AdmissibleQ(const ComplexMatrix& q, int excess, const Tolerance& tol = {});

  const ComplexMatrix& q() const { return q_; }
  int rank_defect() const { return rank_defect_; }
  int dim() const { return static_cast<int>(q_.rows()); }
  const HermEig& spectrum() const { return spectrum_; }

  /// e^{tQ}.
  ComplexMatrix exp_q(double t) const;
  /// Orthonormal eigenvectors spanning the range of I - e^{-Q}.
  ComplexMatrix defect_basis() const;

 private:
  ComplexMatrix q_;
  HermEig spectrum_;
  int rank_defect_ = 0;
  double rank_tol_ = 0.0;
};

/// Unitary W on C^n (+) C^m, read in the 2x2 block layout [W11 W12; W21 W22].
class DilationUnitary {
 public:
  DilationUnitary(ComplexMatrix w, int n, const Tolerance& tol = {});

  const ComplexMatrix& matrix() const { return w_; }
  int n() const { return n_; }
  int m() const { return static_cast<int>(w_.rows()) - n_; }

  ComplexMatrix w11() const { return w_.topLeftCorner(n_, n_); }
  ComplexMatrix w12() const { return w_.topRightCorner(n_, m()); }
  ComplexMatrix w21() const { return w_.bottomLeftCorner(m(), n_); }
  ComplexMatrix w22() const { return w_.bottomRightCorner(m(), m()); }

 private:
  ComplexMatrix w_;
  int n_ = 0;
};

/// [e^{-Q/2}, (I-e^{-Q})^{1/2}; (I-e^{-Q})^{1/2}, -e^{-Q/2}] on
/// K (+) R(I-e^{-Q}), extended by the identity on the rest of C^m. The range
/// is identified with the first rank_defect coordinates of C^m through the
/// columns of `range_embedding` (default: q.defect_basis()), which must span
/// exactly R(I-e^{-Q}).
DilationUnitary default_dilation_unitary(
    const AdmissibleQ& q, int m,
    const std::optional<ComplexMatrix>& range_embedding = std::nullopt,
    const Tolerance& tol = {});

/// psi_j = e_j + e^{Q/2} W12 ~e_j with ~e_j from dilate(f).
Frame dual_of_parseval(const ParsevalFrame& f, const AdmissibleQ& q,
                       const DilationUnitary& w, const Tolerance& tol = {});

bool admissible_q_check(const ParsevalFrame& f, const ComplexMatrix& q,
                        const Tolerance& tol = {});

/// T = sum_j g_j e_j^*, the compression to K of the unitary carrying the
/// dilation of f onto the dilation of g.
ComplexMatrix parseval_transfer_operator(const ParsevalFrame& f,
                                         const ParsevalFrame& g);
bool admissible_parseval_check(const ParsevalFrame& f, const ParsevalFrame& g,
                               const Tolerance& tol = {});

// ---- excess one -----------------------------------------------------------

struct ExcessOneParams {
  double epsilon = 1.0;
  ComplexVector u;
  double theta = 0.0;
  double theta_tilde = 0.0;

  /// Throws BadEpsilon or NotUnit.
  void validate(const Tolerance& tol = {}) const;
};

/// I + (eps - 1) u u^*.
ComplexMatrix excess_one_T(double eps, const ComplexVector& u,
                           const Tolerance& tol = {});
ComplexMatrix excess_one_W(double eps, const ComplexVector& u, double theta,
                           double theta_tilde, const Tolerance& tol = {});

/// psi_j = e_j + (sqrt(1-eps^2)/eps) e^{i theta} u ~e_j.
Frame excess_one_dual(const ParsevalFrame& f, const ExcessOneParams& p,
                      const Tolerance& tol = {});

/// Inverse of excess_one_dual: theta is normalized to 0 and absorbed into u.
ExcessOneParams recover_excess_one_params(const ParsevalFrame& f,
                                          const Frame& g,
                                          const Tolerance& tol = {});

// ---- near-Riesz -----------------------------------------------------------

/// Duals from the structured dilation; W acts on K (+) M1 (+) M2 with M1 in
/// d.m1_basis coordinates. Vectors that vanish to rank_tol are stored as
/// exact zeros.
Frame near_riesz_dual(const NearRieszDilation& d, const AdmissibleQ& q,
                      const DilationUnitary& w, const Tolerance& tol = {});
Frame near_riesz_dual(const ParsevalFrame& f, const AdmissibleQ& q,
                      const DilationUnitary& w, const Tolerance& tol = {});

struct NearRieszParams {
  AdmissibleQ q;
  DilationUnitary w;
};

/// Q = -Q0 with the default unitary whose range embedding is m1_basis; the
/// resulting dual is e^{-Q0} e_j on J0 and zero on J1.
NearRieszParams simplest_dual_params(const NearRieszDilation& d,
                                     const Tolerance& tol = {});

// ---- general frames -------------------------------------------------------

/// Q need not be Hermitian; e^{-Q_phi} Q must be positive semidefinite. W has
/// top-left block e^{-Q_phi/2} e^{-Q/2} e^{Q_phi/2}.
struct GeneralDualParams {
  ComplexMatrix q;
  DilationUnitary w;
};

/// Builds params with the default unitary. Throws InadmissibleParams.
GeneralDualParams make_general_dual_params(const Frame& f,
                                           const ComplexMatrix& q,
                                           const Tolerance& tol = {});

/// psi_j = e^{-Q_phi/2} e_j + R_Q W12 ~e_j, R_Q = e^{-Q_phi} e^{Q/2} e^{Q_phi/2}.
Frame general_dual(const Frame& f, const GeneralDualParams& p,
                   const Tolerance& tol = {});

/// R_Q for the given frame and Q.
ComplexMatrix general_dual_operator(const Frame& f, const ComplexMatrix& q,
                                    const Tolerance& tol = {});

/// e^{(Q-Q_phi)/2} F_{e°} for Hermitian Q commuting with Q_phi.
Frame general_dual_selfadjoint(const Frame& f, const ComplexMatrix& q,
                               const Tolerance& tol = {});

struct PolarForm {
  ComplexMatrix q_psi;  // e^{Q_psi/2} = sqrt(R_Q R_Q^*)
  ParsevalFrame pf;     // canonical Parseval part of the dual
  ComplexMatrix unitary;
};

PolarForm polar_form(const Frame& f, const GeneralDualParams& p,
                     const Tolerance& tol = {});

/// Conditions for an A-tight dual: Q_phi + ln(A) I >= 0 and
/// rank(I - e^{-Q_phi}/A) <= excess.
QAdmissibility tight_dual_check(const Frame& f, double a,
                                const Tolerance& tol = {});
bool tight_dual_exists(const Frame& f, double a, const Tolerance& tol = {});
/// The A-tight dual with Q = Q_phi + ln(A) I. Throws InadmissibleParams.
Frame tight_dual(const Frame& f, double a, const Tolerance& tol = {});

// ---- classical construction ----------------------------------------------

/// psi_j = S^{-1} phi_j + h_j - sum_i <S^{-1} phi_j, phi_i> h_i; `h` holds
/// h_j as columns.
Frame oracle_dual_bessel(const Frame& f, const ComplexMatrix& h,
                         const Tolerance& tol = {});

}  // namespace framedual
