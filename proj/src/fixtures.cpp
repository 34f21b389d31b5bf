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

#include "framedual/fixtures.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace framedual {

namespace {

using std::numbers::pi;

// Uniform double in (0, 1] from the top 53 bits; independent of the standard
// library's distribution implementations.
double unit_open_closed(std::mt19937_64& gen) {
  return (static_cast<double>(gen() >> 11) + 1.0) * 0x1.0p-53;
}

Complex gaussian(std::mt19937_64& gen) {
  const double r = std::sqrt(-std::log(unit_open_closed(gen)));
  const double angle = 2.0 * pi * unit_open_closed(gen);
  // |z|^2 ~ Exp(1): each component has variance 1/2.
  return std::polar(r, angle);
}

ComplexMatrix draw(std::mt19937_64& gen, int rows, int cols) {
  ComplexMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) m(r, c) = gaussian(gen);
  }
  return m;
}

}  // namespace

ParsevalFrame mercedes() {
  const double s = std::sqrt(2.0 / 3.0);
  const double h = std::sqrt(3.0) / 2.0;
  ComplexMatrix m(2, 3);
  m << s, -0.5 * s, -0.5 * s,
       0.0, h * s, -h * s;
  return ParsevalFrame(std::move(m));
}

SicPovm sic_povm_qubit() {
  const double a = 1.0 / std::sqrt(3.0);
  const double b = std::sqrt(2.0 / 3.0);
  ComplexMatrix states(2, 4);
  states << 1.0, a, a, a,
            0.0, b, b * std::polar(1.0, 2.0 * pi / 3.0),
            b * std::polar(1.0, -2.0 * pi / 3.0);
  ComplexMatrix bloch(3, 4);
  for (int j = 0; j < 4; ++j) {
    bloch.col(j) = bloch_map(states.col(j)).cast<Complex>();
  }
  return {Frame(std::move(states)), Frame(std::move(bloch))};
}

Eigen::Vector3d bloch_map(const ComplexVector& e, const Tolerance& tol) {
  if (e.size() != 2) {
    throw FrameError(ErrorCode::DimensionMismatch, "qubit state must be in C^2");
  }
  if (std::abs(e.norm() - 1.0) > tol.residual_tol) {
    throw FrameError(ErrorCode::NotUnit, "state must be normalized");
  }
  // rho_12 = e1 conj(e2) = (x - i y)/2, rho_11 - rho_22 = z.
  const Complex off = e(0) * std::conj(e(1));
  return {2.0 * off.real(), -2.0 * off.imag(), std::norm(e(0)) - std::norm(e(1))};
}

ParsevalFrame casazza_christensen_block(int k) {
  if (k < 1) {
    throw FrameError(ErrorCode::InadmissibleParams, "block size must be >= 1");
  }
  ComplexMatrix m(k, k + 1);
  m.leftCols(k) = ComplexMatrix::Identity(k, k) -
                  ComplexMatrix::Constant(k, k, 1.0 / k);
  m.col(k).setConstant(1.0 / std::sqrt(static_cast<double>(k)));
  return ParsevalFrame(std::move(m));
}

ParsevalFrame casazza_christensen_union(int count) {
  if (count < 1) {
    throw FrameError(ErrorCode::InadmissibleParams, "need at least one block");
  }
  const int dim = count * (count + 1) / 2;
  const int size = dim + count;
  ComplexMatrix m = ComplexMatrix::Zero(dim, size);
  int row = 0;
  int col = 0;
  for (int k = 1; k <= count; ++k) {
    m.block(row, col, k, k + 1) = casazza_christensen_block(k).synthesis();
    row += k;
    col += k + 1;
  }
  return ParsevalFrame(std::move(m));
}

ComplexMatrix random_gaussian_matrix(int rows, int cols, Seed seed) {
  std::mt19937_64 gen(seed.value);
  return draw(gen, rows, cols);
}

Frame random_frame(int n, int m, Seed seed, bool parseval) {
  if (n < 1 || m < n) {
    throw FrameError(ErrorCode::NotAFrame, "random frame needs m >= n >= 1");
  }
  std::mt19937_64 gen(seed.value);
  for (;;) {
    ComplexMatrix phi = draw(gen, n, m);
    if (rank_of(phi) != n) continue;
    if (!parseval) return Frame(std::move(phi));
    const ComplexMatrix s = phi * phi.adjoint();
    return ParsevalFrame(matrix_inv_sqrt(s) * phi);
  }
}

}  // namespace framedual
