// Copyright 2026 The eigensynth developers
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

#include <random>
#include <vector>

#include "eigensynth/interpolation.hpp"
#include "eigensynth/matrix.hpp"

namespace eigensynth::testsupport {

inline Matrix random_matrix(std::mt19937& gen, Eigen::Index rows,
                            Eigen::Index cols, double scale = 1.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = Cx(dist(gen), dist(gen));
    }
  }
  return m;
}

inline Matrix random_unitary(std::mt19937& gen, Eigen::Index dim) {
  const Matrix m = random_matrix(gen, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(m);
  return Matrix(qr.householderQ());
}

inline Matrix random_hermitian(std::mt19937& gen, Eigen::Index dim,
                               double scale = 1.0) {
  const Matrix m = random_matrix(gen, dim, dim, scale);
  return 0.5 * (m + m.adjoint());
}

/// Random alphabet with a comfortable pairwise separation so Lagrange
/// weights stay tame.
inline Alphabet random_alphabet(std::mt19937& gen, int m,
                                double min_sep = 0.3) {
  std::uniform_real_distribution<double> dist(-1.5, 1.5);
  std::vector<Cx> values;
  while (static_cast<int>(values.size()) < m) {
    const Cx candidate(dist(gen), dist(gen));
    bool separated = true;
    for (const Cx& v : values) {
      if (std::abs(v - candidate) < min_sep) {
        separated = false;
        break;
      }
    }
    if (separated) values.push_back(candidate);
  }
  return Alphabet(values);
}

inline std::vector<Cx> random_entries(std::mt19937& gen, std::size_t count,
                                      double scale = 2.0) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  std::vector<Cx> entries(count);
  for (Cx& e : entries) e = Cx(dist(gen), dist(gen));
  return entries;
}

}  // namespace eigensynth::testsupport
