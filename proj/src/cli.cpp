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

#include "framedual/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "framedual/document.hpp"
#include "framedual/duals.hpp"
#include "framedual/fixtures.hpp"
#include "framedual/naimark.hpp"

namespace framedual::cli {

namespace {

using json = nlohmann::ordered_json;

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

struct Common {
  double rank_tol = Tolerance{}.rank_tol;
  double residual_tol = Tolerance{}.residual_tol;
  std::string format = "human";

  Tolerance tolerance() const {
    Tolerance t{rank_tol, residual_tol};
    t.validate();
    return t;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_format) {
  // Open interval (0, 1); a bad value is a usage error, not a math one.
  const auto unit_open = CLI::Range(0.0, 1.0) & !CLI::IsMember({0.0, 1.0});
  cmd->add_option("--rank-tol", c.rank_tol, "relative rank threshold")
      ->check(unit_open);
  cmd->add_option("--residual-tol", c.residual_tol,
                  "verification residual threshold")
      ->check(unit_open);
  if (with_format) {
    cmd->add_option("--format", c.format, "report format")
        ->check(CLI::IsMember({"human", "json"}));
  }
}

json real_array(const RealVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json index_array(const std::vector<int>& v) {
  json a = json::array();
  for (int i : v) a.push_back(i);
  return a;
}

// Human form: one "key  value" line per top-level field; nested values are
// printed as compact JSON.
void print_report(std::ostream& out, const json& report,
                  const std::string& format) {
  if (format == "json") {
    out << report.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : report.items()) {
    out << std::left << std::setw(22) << key << ' ';
    if (value.is_string()) {
      out << value.get<std::string>();
    } else {
      out << value.dump();
    }
    out << "\n";
  }
}

void emit_document(std::ostream& out, const std::string& path,
                   const FrameDocument& doc) {
  if (path.empty() || path == "-") {
    out << serialize(doc);
  } else {
    save_document(path, doc);
  }
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeArgs {
  Common common;
  std::string input;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const Tolerance tol = a.common.tolerance();
  const Frame f = load_document(a.input).to_frame(tol);
  const FrameBounds b = frame_bounds(f, tol);
  const CanonicalFactorization cf = canonical_factorization(f, tol);
  json report = {
      {"dim", f.dim()},
      {"vectors", f.size()},
      {"lower_bound", b.lower},
      {"upper_bound", b.upper},
      {"tight", b.tight(tol)},
      {"parseval", is_parseval(f, tol)},
      {"potential", frame_potential(f)},
      {"excess", excess(f, tol)},
      {"q_eigenvalues", real_array(herm_eig(cf.q, tol).eigenvalues)},
  };
  print_report(out, report, a.common.format);
  return kOk;
}

// ---- dual ------------------------------------------------------------------

struct DualArgs {
  Common common;
  std::string input;
  std::string mode = "canonical";
  double eps = 1.0;
  std::string u;
  double theta = 0.0;
  double theta_tilde = 0.0;
  std::string q_path;
  double a = 1.0;
  std::string output;
};

Frame build_dual(const DualArgs& a, const Frame& f, const Tolerance& tol) {
  if (a.mode == "canonical") return canonical_dual(f, tol);
  if (a.mode == "excess-one") {
    const ParsevalFrame pf(f, tol);
    ExcessOneParams p;
    p.epsilon = a.eps;
    p.theta = a.theta;
    p.theta_tilde = a.theta_tilde;
    if (a.u.empty()) {
      p.u = ComplexVector::Unit(f.dim(), 0);
    } else {
      nlohmann::json uj;
      try {
        uj = nlohmann::json::parse(a.u);
      } catch (const json::parse_error& e) {
        throw FrameError(ErrorCode::ParseError, std::string("--u: ") + e.what());
      }
      p.u = vector_from_json(uj);
    }
    return excess_one_dual(pf, p, tol);
  }
  if (a.mode == "general") {
    if (a.q_path.empty()) {
      throw FrameError(ErrorCode::InadmissibleParams, "mode general needs --q");
    }
    const ComplexMatrix q = load_matrix(a.q_path);
    return general_dual(f, make_general_dual_params(f, q, tol), tol);
  }
  if (a.mode == "tight") return tight_dual(f, a.a, tol);
  // near-riesz
  const NearRieszDilation d = near_riesz_dilate(ParsevalFrame(f, tol), tol);
  const NearRieszParams p = simplest_dual_params(d, tol);
  return near_riesz_dual(d, p.q, p.w, tol);
}

int cmd_dual(const DualArgs& a, std::ostream& out, std::ostream& err) {
  const Tolerance tol = a.common.tolerance();
  const FrameDocument doc = load_document(a.input);
  const Frame f = doc.to_frame(tol);
  const Frame dual = build_dual(a, f, tol);
  const std::string name = doc.name.value_or("frame") + "-dual-" + a.mode;
  emit_document(out, a.output, FrameDocument::from_frame(dual, name));
  const double residual = dual_residual(f, dual);
  err << "dual residual " << residual << "\n";
  return residual <= tol.residual_tol ? kOk : kVerificationFailed;
}

// ---- dilate ----------------------------------------------------------------

struct DilateArgs {
  Common common;
  std::string input;
  std::string mode = "plain";
  std::string output;
};

json columns_json(const ComplexMatrix& m) {
  json cols = json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    json v = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      v.push_back(pair(m(r, c)));
    }
    cols.push_back(std::move(v));
  }
  return cols;
}

int cmd_dilate(const DilateArgs& a, std::ostream& out) {
  const Tolerance tol = a.common.tolerance();
  const FrameDocument doc = load_document(a.input);
  const ParsevalFrame f(doc.to_frame(tol), tol);
  json report;
  ComplexMatrix onb;
  if (a.mode == "plain") {
    const Dilation d = dilate(f, tol);
    onb = d.onb;
    report = {{"mode", "plain"},
              {"dim_k", f.dim()},
              {"dim_m", d.excess_dim()},
              {"complement", columns_json(d.complement)}};
  } else {
    const NearRieszDilation d = near_riesz_dilate(f, tol);
    onb = d.onb;
    report = {{"mode", "near-riesz"},
              {"dim_k", f.dim()},
              {"j0", index_array(d.j0)},
              {"j1", index_array(d.j1)},
              {"q0_eigenvalues", real_array(herm_eig(d.q0, tol).eigenvalues)},
              {"exp_q0_eigenvalues",
               real_array(herm_eig(matrix_exp(d.q0, tol), tol).eigenvalues)},
              {"dim_m1", d.m1_dim()},
              {"dim_m2", d.m2_dim},
              {"appendix_lemmas", check_appendix_lemmas(d, tol)},
              {"complement", columns_json(d.complement())}};
  }
  const int total = static_cast<int>(onb.rows());
  const double unitarity =
      (onb.adjoint() * onb - ComplexMatrix::Identity(total, total)).norm();
  report["onb_unitarity_residual"] = unitarity;
  if (!a.output.empty()) {
    save_document(a.output, FrameDocument::from_frame(
                                Frame(onb, tol), doc.name.value_or("frame") +
                                                     "-onb-" + a.mode));
  } else {
    report["onb"] = columns_json(onb);
  }
  print_report(out, report, a.common.format);
  return unitarity <= tol.residual_tol ? kOk : kVerificationFailed;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  Common common;
  std::string frame;
  std::string dual;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Tolerance tol = a.common.tolerance();
  const Frame f = load_document(a.frame).to_frame(tol);
  const Frame g = load_document(a.dual).to_frame(tol);
  const double residual = dual_residual(f, g);
  const bool ok = residual <= tol.residual_tol;
  print_report(out, {{"residual", residual}, {"dual", ok}}, a.common.format);
  return ok ? kOk : kVerificationFailed;
}

// ---- gen -------------------------------------------------------------------

struct GenArgs {
  Common common;
  std::string fixture;
  int k = 2;
  int n = 2;
  int m = 3;
  std::uint64_t seed = 0;
  bool parseval = false;
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  FrameDocument doc;
  if (a.fixture == "mercedes") {
    doc = FrameDocument::from_frame(mercedes(), "mercedes");
  } else if (a.fixture == "sic") {
    doc = FrameDocument::from_frame(sic_povm_qubit().states, "sic-povm-qubit");
  } else if (a.fixture == "bloch") {
    doc = FrameDocument::from_frame(sic_povm_qubit().bloch, "sic-povm-bloch");
  } else if (a.fixture == "cc") {
    doc = FrameDocument::from_frame(casazza_christensen_block(a.k),
                                    "cc-block-" + std::to_string(a.k));
  } else if (a.fixture == "cc-union") {
    doc = FrameDocument::from_frame(casazza_christensen_union(a.k),
                                    "cc-union-" + std::to_string(a.k));
  } else if (a.fixture == "random") {
    doc = FrameDocument::from_frame(
        random_frame(a.n, a.m, Seed{a.seed}, a.parseval),
        std::string(a.parseval ? "random-parseval" : "random"), a.seed);
  } else {
    throw FrameError(ErrorCode::UnknownFixture, a.fixture);
  }
  emit_document(out, a.output, doc);
  return kOk;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::UnknownFixture: return kUsage;
    default: return kPrecondition;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Frames, Naimark dilations and their dual frames", "framedual"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "bounds, potential, excess of a frame");
  an->add_option("input", analyze.input, "frame document")->required();
  add_common(an, analyze.common, true);

  DualArgs dual;
  auto* du = app.add_subcommand("dual", "construct a dual frame");
  du->add_option("input", dual.input, "frame document")->required();
  du->add_option("--mode", dual.mode, "dual family")
      ->check(CLI::IsMember(
          {"canonical", "excess-one", "general", "tight", "near-riesz"}));
  du->add_option("--eps", dual.eps, "excess-one: epsilon in (0, 1]");
  du->add_option("--u", dual.u, "excess-one: unit vector as JSON");
  du->add_option("--theta", dual.theta, "excess-one: phase theta");
  du->add_option("--theta-tilde", dual.theta_tilde, "excess-one: phase theta~");
  du->add_option("--q", dual.q_path, "general: matrix document with Q");
  du->add_option("--A", dual.a, "tight: target bound A");
  du->add_option("-o,--output", dual.output, "output document (default stdout)");
  add_common(du, dual.common, false);

  DilateArgs dil;
  auto* dl = app.add_subcommand("dilate", "Naimark dilation of a Parseval frame");
  dl->add_option("input", dil.input, "frame document")->required();
  dl->add_option("--mode", dil.mode, "dilation flavour")
      ->check(CLI::IsMember({"plain", "near-riesz"}));
  dl->add_option("-o,--output", dil.output, "write the basis as a document");
  add_common(dl, dil.common, true);

  VerifyArgs ver;
  auto* ve = app.add_subcommand("verify", "check that two frames are dual");
  ve->add_option("frame", ver.frame, "frame document")->required();
  ve->add_option("dual", ver.dual, "candidate dual document")->required();
  add_common(ve, ver.common, true);

  GenArgs gen;
  auto* ge = app.add_subcommand("gen", "write a reference frame");
  ge->add_option("fixture", gen.fixture,
                 "mercedes | sic | bloch | cc | cc-union | random")
      ->required();
  ge->add_option("--K", gen.k, "cc block size / number of blocks");
  ge->add_option("--n", gen.n, "random: dimension");
  ge->add_option("--m", gen.m, "random: number of vectors");
  ge->add_option("--seed", gen.seed, "random: seed");
  ge->add_flag("--parseval", gen.parseval, "random: normalize to Parseval");
  ge->add_option("-o,--output", gen.output, "output document (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (an->parsed()) return cmd_analyze(analyze, out);
    if (du->parsed()) return cmd_dual(dual, out, err);
    if (dl->parsed()) return cmd_dilate(dil, out);
    if (ve->parsed()) return cmd_verify(ver, out);
    if (ge->parsed()) return cmd_gen(gen, out);
  } catch (const FrameError& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace framedual::cli
