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

// Acceptance suite. One line per criterion, nonzero exit if any fails.
// Tolerances are fixed here on purpose; do not loosen them to get a pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "framedual/duals.hpp"
#include "framedual/fixtures.hpp"
#include "framedual/naimark.hpp"

namespace fd = framedual;
using fd::Complex;
using fd::ComplexMatrix;
using fd::ComplexVector;
using fd::RealVector;
using std::numbers::pi;

namespace {

// Collects failed sub-checks and the worst observed error for the report.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  // err <= bound, and remember the largest ratio seen.
  void within(double err, double bound, const std::string& what) {
    if (std::isfinite(err) && bound > 0.0) worst_ = std::max(worst_, err / bound);
    expect(err <= bound, what + " err=" + fmt(err) + " tol=" + fmt(bound));
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::string s = "worst err/tol " + fmt(worst_);
    for (const auto& f : failures_) s += "; " + f;
    if (failed_ > static_cast<int>(failures_.size())) {
      s += "; +" + std::to_string(failed_ - static_cast<int>(failures_.size())) + " more";
    }
    return s;
  }
  static std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
  }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
  double worst_ = 0.0;
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix dephase(const ComplexMatrix& m) {
  Eigen::Index r = 0;
  Eigen::Index c = 0;
  m.cwiseAbs().maxCoeff(&r, &c);
  return m * (std::abs(m(r, c)) / m(r, c));
}

ComplexVector mercedes_u(double a, double b) {
  ComplexVector u(2);
  u << std::cos(a), -std::polar(1.0, b) * std::sin(a);
  return u;
}

ComplexVector random_unit(int n, std::uint64_t seed) {
  const ComplexVector g = fd::random_gaussian_matrix(n, 1, fd::Seed{seed}).col(0);
  return g / g.norm();
}

fd::ParsevalFrame random_pf(int n, int excess, std::uint64_t seed) {
  return fd::ParsevalFrame(fd::random_frame(n, n + excess, fd::Seed{seed}, true));
}

ComplexMatrix random_psd(int n, int rank, double lo, double hi, std::uint64_t seed) {
  const ComplexMatrix g = fd::random_gaussian_matrix(n, n, fd::Seed{seed});
  const Eigen::HouseholderQR<ComplexMatrix> qr(g);
  const ComplexMatrix u = qr.householderQ() * ComplexMatrix::Identity(n, n);
  RealVector lambda = RealVector::Zero(n);
  for (int k = 0; k < rank; ++k) lambda(k) = lo + (hi - lo) * (k + 1.0) / (rank + 1.0);
  return u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
}

const std::vector<double> kAngles = {0.0, pi / 3.0, 3.0 * pi / 4.0};

// 1
void mercedes_golden(Check& c) {
  const fd::ParsevalFrame m = fd::mercedes();
  c.within(max_abs(fd::frame_operator(m) - ComplexMatrix::Identity(2, 2)), 1e-10,
           "frame operator");
  c.within(std::abs(fd::frame_potential(m) - 2.0), 1e-10, "potential");
  c.expect(fd::excess(m) == 1, "excess");
  const auto d = fd::dilate(m);
  c.expect(d.complement.rows() == 1, "complement dimension");
  const ComplexMatrix want = ComplexMatrix::Constant(1, 3, 1.0 / std::sqrt(3.0));
  c.within(max_abs(dephase(d.complement) - want), 1e-10, "complement");
}

// 2
void excess_one_family(Check& c) {
  const fd::ParsevalFrame m = fd::mercedes();
  for (double eps : {0.25, 0.5, 0.75, 1.0}) {
    for (double a : kAngles) {
      for (double b : kAngles) {
        for (double th : kAngles) {
          const fd::Frame g = fd::excess_one_dual(m, {eps, mercedes_u(a, b), th, 0.0});
          c.within(fd::dual_residual(m, g), 1e-9, "dual residual");
          c.expect(fd::verify_dual(m, g), "verify_dual");
          c.within(rel(fd::frame_potential(g), 1.0 + std::pow(eps, -4.0)), 1e-8,
                   "potential");
          const auto bounds = fd::frame_bounds(g);
          c.within(rel(bounds.lower, 1.0), 1e-8, "lower bound");
          c.within(rel(bounds.upper, 1.0 / (eps * eps)), 1e-8, "upper bound");
        }
      }
    }
  }
}

// 3
void completeness(Check& c) {
  const fd::ParsevalFrame m = fd::mercedes();
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const ComplexVector w = fd::random_gaussian_matrix(2, 1, fd::Seed{seed}).col(0);
    ComplexMatrix h(2, 3);
    h.colwise() = w / std::sqrt(3.0);
    const fd::Frame oracle = fd::oracle_dual_bessel(m, h);
    const auto p = fd::recover_excess_one_params(m, oracle);
    const fd::Frame back = fd::excess_one_dual(m, p);
    c.within((back.synthesis() - oracle.synthesis()).norm(), 1e-9, "reproduction");
  }
}

// 4
void potential_identity(Check& c) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const int m = n + static_cast<int>((seed * 7) % (11 - n));
    const fd::Frame f = fd::random_frame(n, m, fd::Seed{seed + 1000}, false);
    const double fp = fd::frame_potential(f);
    const double eig = fd::herm_eig(fd::frame_operator(f)).eigenvalues.squaredNorm();
    c.within(rel(fp, eig), 1e-8, "potential vs eigenvalues");
  }
}

// 5
void naimark(Check& c) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const int k = static_cast<int>(seed % 5);
    const auto f = random_pf(n, k, seed + 2000);
    const auto d = fd::dilate(f);
    const auto size = d.onb.cols();
    c.within((d.onb.adjoint() * d.onb - ComplexMatrix::Identity(size, size)).norm(), 1e-10,
             "onb unitarity");
    c.expect(d.excess_dim() == fd::excess(f), "dim M = excess");
    c.expect(d.onb.topRows(n) == f.synthesis(), "truncation");
  }
}

// 6
void near_riesz(Check& c) {
  const fd::ParsevalFrame m = fd::mercedes();
  const auto d = fd::near_riesz_dilate(m);
  const RealVector spec = fd::herm_eig(fd::matrix_exp(d.q0)).eigenvalues;
  c.within(std::abs(spec(0) - 1.0 / 3.0), 1e-10, "e^Q0 eigenvalue 1/3");
  c.within(std::abs(spec(1) - 1.0), 1e-10, "e^Q0 eigenvalue 1");
  const ComplexMatrix defect = ComplexMatrix::Identity(2, 2) - fd::matrix_exp(d.q0);
  c.within(max_abs(defect - m.vector(2) * m.vector(2).adjoint()), 1e-10, "I - e^Q0");
  const double r3 = std::sqrt(3.0);
  ComplexMatrix want(2, 2);
  want << 1.0 / 6.0, r3 / 6.0, r3 / 6.0, 0.5;
  c.within(max_abs(defect - want), 1e-10, "I - e^Q0 entries");
  c.expect(d.m2_dim == 0, "dim M2");
  c.expect(fd::check_appendix_lemmas(d), "appendix lemmas on Mercedes");
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const int k = static_cast<int>(seed % 4);
    const auto dd = fd::near_riesz_dilate(random_pf(n, k, seed + 3000));
    c.expect(fd::check_appendix_lemmas(dd), "appendix lemmas seed " + std::to_string(seed));
  }
}

// 7
void unitarity(Check& c) {
  const fd::Tolerance tight{1e-10, 1e-10};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const int rank = 1 + static_cast<int>((seed / 6) % n);
    const int m = rank + static_cast<int>(seed % 3);
    const fd::AdmissibleQ q(random_psd(n, rank, 0.01, 5.0, seed + 4000), m);
    const auto w = fd::default_dilation_unitary(q, m);
    c.expect(fd::is_unitary(w.matrix(), tight), "W unitary");
    const ComplexMatrix defect = ComplexMatrix::Identity(n, n) - q.exp_q(-1.0);
    c.within((w.w21().adjoint() * w.w21() - defect).norm(), 1e-9, "W21^* W21");

    const double eps = 0.01 + 0.99 * static_cast<double>(seed) / 100.0;
    const ComplexVector u = random_unit(n, seed + 4500);
    const ComplexMatrix w1 = fd::excess_one_W(eps, u, 0.37 * seed, 1.3 * seed);
    c.expect(fd::is_unitary(w1, tight), "excess-one W unitary");
    const ComplexMatrix t = fd::excess_one_T(eps, u);
    const ComplexMatrix w21 = w1.bottomLeftCorner(1, n);
    c.within((w21.adjoint() * w21 - (ComplexMatrix::Identity(n, n) - t * t)).norm(), 1e-9,
             "excess-one W21^* W21");
  }
}

// 8
void general_duals(Check& c) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const int k = 1 + static_cast<int>(seed % 3);
    const fd::Frame f = fd::random_frame(n, n + k, fd::Seed{seed + 5000}, false);
    const auto cf = fd::canonical_factorization(f);
    // Random nonnegative spectrum on the eigenbasis of S keeps Q commuting.
    const ComplexMatrix scale = fd::random_gaussian_matrix(n, 1, fd::Seed{seed + 5500});
    RealVector lambda = RealVector::Zero(n);
    for (int i = 0; i < std::min(n, k); ++i) lambda(i) = 0.1 + std::abs(scale(i, 0));
    const ComplexMatrix& v = cf.spectrum.eigenvectors;
    const ComplexMatrix q = v * lambda.cast<Complex>().asDiagonal() * v.adjoint();
    const auto p = fd::make_general_dual_params(f, q);
    const fd::Frame g = fd::general_dual(f, p);
    c.within(fd::dual_residual(f, g), 1e-9, "general dual residual");
    c.expect(fd::verify_dual(f, g), "verify_dual");

    const auto p0 = fd::make_general_dual_params(f, ComplexMatrix::Zero(n, n));
    c.expect(fd::general_dual(f, p0).synthesis() == fd::canonical_dual(f).synthesis(),
             "Q = 0 is the canonical dual");

    const auto polar = fd::polar_form(f, p);
    c.within((fd::matrix_exp(0.5 * polar.q_psi) * polar.pf.synthesis() - g.synthesis())
                 .norm(),
             1e-9, "polar reconstruction");
  }
}

// 9
void tight_duals(Check& c) {
  c.expect(!fd::tight_dual_exists(fd::mercedes(), 2.0), "Mercedes A = 2");
  const auto f = random_pf(2, 3, 6000);
  c.expect(fd::tight_dual_exists(f, 2.0), "random PF A = 2 exists");
  const fd::Frame t = fd::tight_dual(f, 2.0);
  c.within(fd::dual_residual(f, t), 1e-9, "tight dual residual");
  const auto b = fd::frame_bounds(t);
  c.within(rel(b.lower, 2.0), 1e-8, "lower bound");
  c.within(rel(b.upper, 2.0), 1e-8, "upper bound");
  c.expect(fd::tight_dual_exists(f, 1.0), "Parseval A = 1 exists");
  c.within(fd::canonical_factorization(f).q.norm(), 1e-10, "Q = 0 for A = 1");
  c.within(max_abs(fd::tight_dual(f, 1.0).synthesis() - f.synthesis()), 1e-10,
           "A = 1 dual is the frame itself");
}

// 10
void sic_povm(Check& c) {
  const auto sic = fd::sic_povm_qubit();
  const ComplexMatrix& e = sic.states.synthesis();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j) {
        c.within(std::abs(std::norm(e.col(j).dot(e.col(i))) - 1.0 / 3.0), 1e-12, "overlap");
      }
    }
  }
  const auto b = fd::frame_bounds(sic.bloch);
  c.within(rel(b.lower, 4.0 / 3.0), 1e-10, "Bloch lower bound");
  c.within(rel(b.upper, 4.0 / 3.0), 1e-10, "Bloch upper bound");

  const double r2 = std::sqrt(2.0);
  const double r6 = std::sqrt(6.0);
  const std::vector<Eigen::Vector3d> listed = {{0, 0, 1},
                                               {2 * r2 / 3, 0, -1.0 / 3},
                                               {-r2 / 3, r6 / 3, -1.0 / 3},
                                               {-r2 / 3, -r6 / 3, -1.0 / 3}};
  for (int j = 0; j < 4; ++j) {
    c.within((fd::bloch_map(e.col(j)) - listed[j]).cwiseAbs().maxCoeff(), 1e-12,
             "bloch_map f" + std::to_string(j + 1));
  }

  const double s = std::sqrt(3.0) / 2.0;
  const fd::ParsevalFrame pf(s * sic.bloch.synthesis());
  const std::vector<ComplexVector> dirs = {random_unit(3, 7001), random_unit(3, 7002),
                                           ComplexVector::Unit(3, 2)};
  for (double eps : {0.25, 0.5, 0.75}) {
    for (const auto& u : dirs) {
      ComplexMatrix psi = pf.synthesis();
      psi.colwise() += std::sqrt(1.0 - eps * eps) / (2.0 * eps) * u;
      psi *= s;
      c.expect(fd::verify_dual(sic.bloch, fd::Frame(psi)), "scaled dual");
      const fd::Frame lib = fd::excess_one_dual(pf, {eps, u, 0.0, 0.0});
      c.within(max_abs(s * lib.synthesis() - psi), 1e-12, "library vs closed form");
    }
  }
}

// 11
void casazza_christensen(Check& c) {
  for (int k = 1; k <= 16; ++k) {
    const auto cc = fd::casazza_christensen_block(k);
    c.within(cc.parseval_residual(), 1e-10, "Parseval K=" + std::to_string(k));
    const auto d = fd::dilate(cc);
    ComplexMatrix want = ComplexMatrix::Constant(1, k + 1, 1.0 / std::sqrt(k));
    want(0, k) = 0.0;
    c.within(max_abs(dephase(d.complement) - want), 1e-10,
             "complement K=" + std::to_string(k));
    for (double eps : {0.5, 1.0}) {
      const ComplexVector u = random_unit(k, 8000 + static_cast<std::uint64_t>(k));
      ComplexMatrix psi = cc.synthesis();
      const ComplexVector shift = std::sqrt((1.0 - eps * eps) / k) / eps * u;
      for (int j = 0; j < k; ++j) psi.col(j) += shift;
      c.within(fd::dual_residual(cc, fd::Frame(psi)), 1e-9, "closed-form dual");
      const fd::Frame lib = fd::excess_one_dual(cc, {eps, u, 0.0, 0.0});
      c.within(fd::dual_residual(cc, lib), 1e-9, "library dual");
    }
  }
}

// 12
void simplest_dual(Check& c) {
  std::vector<fd::ParsevalFrame> frames = {fd::mercedes()};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    frames.push_back(random_pf(1 + static_cast<int>(seed % 5), 1, seed + 9000));
  }
  for (const auto& f : frames) {
    const auto d = fd::near_riesz_dilate(f);
    const auto p = fd::simplest_dual_params(d);
    const fd::Frame g = fd::near_riesz_dual(d, p.q, p.w);
    c.within(fd::dual_residual(f, g), 1e-9, "dual residual");
    for (int j : d.j1) {
      c.expect(g.synthesis().col(j).cwiseAbs().maxCoeff() == 0.0, "exact zero");
    }
    for (std::size_t a = 0; a < d.j0.size(); ++a) {
      for (std::size_t b = 0; b < d.j0.size(); ++b) {
        const Complex ip = g.vector(d.j0[b]).dot(f.vector(d.j0[a]));
        c.within(std::abs(ip - (a == b ? 1.0 : 0.0)), 1e-9, "biorthogonality");
      }
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Mercedes golden values", mercedes_golden},
      {2, "excess-one dual family over the parameter grid", excess_one_family},
      {3, "Bessel-oracle duals recovered by the excess-one family", completeness},
      {4, "frame potential equals sum of squared eigenvalues", potential_identity},
      {5, "Naimark dilation of random Parseval frames", naimark},
      {6, "near-Riesz dilation and appendix lemmas", near_riesz},
      {7, "dilation unitaries", unitarity},
      {8, "general-frame duals and polar form", general_duals},
      {9, "A-tight duals", tight_duals},
      {10, "qubit SIC-POVM and Bloch frame", sic_povm},
      {11, "Casazza-Christensen blocks", casazza_christensen},
      {12, "simplest alternate dual", simplest_dual},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& cr : criteria) {
    Check c;
    std::string detail;
    try {
      cr.run(c);
      detail = c.summary();
    } catch (const std::exception& e) {
      c.expect(false, "");
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  criterion %2d  %s  (%s)\n", c.ok() ? "PASS" : "FAIL", cr.id, cr.name,
                detail.c_str());
    if (!c.ok()) ++failed;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.2f s\n",
              static_cast<int>(criteria.size()) - failed, criteria.size(), secs);
  return failed == 0 ? 0 : 1;
}
