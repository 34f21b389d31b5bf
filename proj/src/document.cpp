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

#include "framedual/document.hpp"

#include <fstream>
#include <sstream>

namespace framedual {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw FrameError(ErrorCode::ParseError, what);
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    parse_fail("complex entries must be [re, im] pairs, got " + j.dump());
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_fail("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(e.what());
  }
}

}  // namespace

Frame FrameDocument::to_frame(const Tolerance& tol) const {
  return Frame(vectors, tol);
}

FrameDocument FrameDocument::from_frame(const Frame& f,
                                        std::optional<std::string> name,
                                        std::optional<std::uint64_t> seed) {
  return {f.dim(), f.synthesis(), std::move(name), seed};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const FrameDocument& doc) {
  json vectors = json::array();
  for (Eigen::Index c = 0; c < doc.vectors.cols(); ++c) {
    json v = json::array();
    for (Eigen::Index r = 0; r < doc.vectors.rows(); ++r) {
      v.push_back(complex_to_json(doc.vectors(r, c)));
    }
    vectors.push_back(std::move(v));
  }
  json out = {{"dim", doc.dim}, {"vectors", std::move(vectors)}};
  if (doc.name) out["name"] = *doc.name;
  if (doc.seed) out["seed"] = *doc.seed;
  return out;
}

FrameDocument document_from_json(const json& j) {
  if (!j.is_object()) parse_fail("frame document must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) {
    parse_fail("missing integer field 'dim'");
  }
  if (!j.contains("vectors") || !j["vectors"].is_array()) {
    parse_fail("missing array field 'vectors'");
  }
  FrameDocument doc;
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 1) parse_fail("'dim' must be positive");
  const json& vs = j["vectors"];
  doc.vectors.resize(doc.dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t c = 0; c < vs.size(); ++c) {
    if (!vs[c].is_array() || vs[c].size() != static_cast<std::size_t>(doc.dim)) {
      parse_fail("vector " + std::to_string(c) + " must have " +
                 std::to_string(doc.dim) + " entries");
    }
    for (int r = 0; r < doc.dim; ++r) {
      doc.vectors(r, static_cast<Eigen::Index>(c)) =
          complex_from_json(vs[c][static_cast<std::size_t>(r)]);
    }
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) parse_fail("'name' must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) parse_fail("'seed' must be unsigned");
    doc.seed = j["seed"].get<std::uint64_t>();
  }
  return doc;
}

std::string serialize(const FrameDocument& doc) {
  return to_json(doc).dump(2) + "\n";
}

FrameDocument parse_document(std::string_view text) {
  return document_from_json(parse_json(text));
}

FrameDocument load_document(const std::filesystem::path& path) {
  return parse_document(read_file(path));
}

void save_document(const std::filesystem::path& path,
                   const FrameDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_fail("cannot write " + path.string());
  out << serialize(doc);
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(complex_to_json(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    parse_fail("matrix must be an object with an 'entries' array");
  }
  const json& rows = j["entries"];
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 || !rows[0].is_array() ? 0 : rows[0].size();
  if (r == 0 || c == 0) parse_fail("matrix must be non-empty");
  if (j.contains("rows") && j["rows"] != r) parse_fail("'rows' mismatch");
  if (j.contains("cols") && j["cols"] != c) parse_fail("'cols' mismatch");
  ComplexMatrix m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) {
      parse_fail("ragged matrix row " + std::to_string(i));
    }
    for (std::size_t k = 0; k < c; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(rows[i][k]);
    }
  }
  return m;
}

ComplexMatrix load_matrix(const std::filesystem::path& path) {
  return matrix_from_json(parse_json(read_file(path)));
}

ComplexVector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) parse_fail("vector must be a non-empty array");
  ComplexVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  }
  return v;
}

}  // namespace framedual
