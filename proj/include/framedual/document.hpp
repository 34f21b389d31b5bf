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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "framedual/frame.hpp"

namespace framedual {

/// On-disk form of a frame:
///
///   {"dim": n, "vectors": [[[re, im], ...], ...], "name": ..., "seed": ...}
///
/// Each vector is a list of n [re, im] pairs; name and seed are optional.
struct FrameDocument {
  int dim = 0;
  ComplexMatrix vectors;  // dim x |J|, one column per vector
  std::optional<std::string> name;
  std::optional<std::uint64_t> seed;

  Frame to_frame(const Tolerance& tol = {}) const;
  static FrameDocument from_frame(const Frame& f,
                                  std::optional<std::string> name = {},
                                  std::optional<std::uint64_t> seed = {});
};

nlohmann::json complex_to_json(Complex z);
nlohmann::json to_json(const FrameDocument& doc);
FrameDocument document_from_json(const nlohmann::json& j);

std::string serialize(const FrameDocument& doc);
FrameDocument parse_document(std::string_view text);

FrameDocument load_document(const std::filesystem::path& path);
void save_document(const std::filesystem::path& path, const FrameDocument& doc);

/// Matrices use {"rows": r, "cols": c, "entries": [[[re, im], ...], ...]}
/// with one inner list per row.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
ComplexMatrix load_matrix(const std::filesystem::path& path);

/// Accepts [x0, x1, ...] of plain numbers or of [re, im] pairs.
ComplexVector vector_from_json(const nlohmann::json& j);

}  // namespace framedual
