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

#include "eigensynth/multivalued.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace eigensynth {

namespace {

constexpr double kPi = std::numbers::pi;

void require_qubits(int qubits, const char* op) {
  if (qubits < kMinFourierQubits || qubits > kMaxFourierQubits) {
    throw std::out_of_range(std::string(op) + ": qubit count " +
                            std::to_string(qubits) + " outside " +
                            std::to_string(kMinFourierQubits) + ".." +
                            std::to_string(kMaxFourierQubits));
  }
}

}  // namespace

SeedOperator lz_seed() {
  return diagonal_seed(Alphabet({Cx(1, 0), Cx(0, 0), Cx(-1, 0)}));
}

TruthTable min_table() {
  // Row index is the position-1 input U, column index the position-0 input V,
  // both running through +1, 0, -1.
  const std::vector<Cx> entries = {
      Cx(1, 0), Cx(1, 0), Cx(1, 0),
      Cx(1, 0), Cx(0, 0), Cx(0, 0),
      Cx(1, 0), Cx(0, 0), Cx(-1, 0),
  };
  return make_table(lz_seed().alphabet, 2, entries);
}

TruthTable max_table() {
  const std::vector<Cx> entries = {
      Cx(1, 0),  Cx(0, 0),  Cx(-1, 0),
      Cx(0, 0),  Cx(0, 0),  Cx(-1, 0),
      Cx(-1, 0), Cx(-1, 0), Cx(-1, 0),
  };
  return make_table(lz_seed().alphabet, 2, entries);
}

Matrix min_operator() {
  const Matrix lam = lz_seed().matrix;
  const Matrix u = lift(lam, 1, 2, 3);
  const Matrix v = lift(lam, 0, 2, 3);
  const Matrix u2 = u * u;
  const Matrix v2 = v * v;
  return 0.5 * (u + v + u2 + v2 - u * v - u2 * v2);
}

Matrix max_operator() {
  const Matrix lam = lz_seed().matrix;
  const Matrix u = lift(lam, 1, 2, 3);
  const Matrix v = lift(lam, 0, 2, 3);
  const Matrix u2 = u * u;
  const Matrix v2 = v * v;
  return 0.5 * (u + v - u2 - v2 + u * v + u2 * v2);
}

SeedOperator half_adder_seed() {
  return diagonal_seed(Alphabet({Cx(-1, 0), Cx(0, 0), Cx(1, 0)}));
}

std::pair<TruthTable, TruthTable> half_adder_tables() {
  // Balanced-ternary digits: index digit 0 maps to -1, 1 to 0, 2 to +1.
  // a + c = sum + 3 carry entrywise.
  const std::vector<Cx> sum = {
      Cx(1, 0),  Cx(-1, 0), Cx(0, 0),
      Cx(-1, 0), Cx(0, 0),  Cx(1, 0),
      Cx(0, 0),  Cx(1, 0),  Cx(-1, 0),
  };
  const std::vector<Cx> carry = {
      Cx(-1, 0), Cx(0, 0), Cx(0, 0),
      Cx(0, 0),  Cx(0, 0), Cx(0, 0),
      Cx(0, 0),  Cx(0, 0), Cx(1, 0),
  };
  const Alphabet alphabet = half_adder_seed().alphabet;
  return {make_table(alphabet, 2, sum), make_table(alphabet, 2, carry)};
}

std::pair<Matrix, Matrix> half_adder_operators() {
  const Matrix lam = half_adder_seed().matrix;
  const Matrix a = lift(lam, 1, 2, 3);
  const Matrix c = lift(lam, 0, 2, 3);
  const Matrix a2 = a * a;
  const Matrix c2 = c * c;
  Matrix sum = a + c - 1.5 * a2 * c - 1.5 * a * c2;
  Matrix carry = 0.5 * (a * c2 + a2 * c);
  return {std::move(sum), std::move(carry)};
}

Matrix im_operator(int qubits) {
  require_qubits(qubits, "im_operator");
  const auto dim = static_cast<Eigen::Index>(ipow(2, qubits));
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index d = 0; d < dim; ++d) {
    out(d, d) = std::exp(Cx(0.0, -2.0 * kPi * static_cast<double>(d) /
                                     static_cast<double>(dim)));
  }
  return out;
}

Matrix im_from_projectors(int qubits) {
  require_qubits(qubits, "im_from_projectors");
  const auto dim = static_cast<Eigen::Index>(ipow(2, qubits));
  Matrix p(2, 2);
  p << Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0);
  // The binary expansion d = sum_k 2^k b_k turns the diagonal phase into a
  // sum of lifted number operators.
  Matrix exponent = Matrix::Zero(dim, dim);
  for (int k = 0; k < qubits; ++k) {
    exponent += static_cast<double>(std::size_t{1} << k) * lift(p, k, qubits, 2);
  }
  return expm(Cx(0.0, -2.0 * kPi / static_cast<double>(dim)) * exponent);
}

Matrix im_from_jz(int qubits) {
  require_qubits(qubits, "im_from_jz");
  const auto dim = static_cast<Eigen::Index>(ipow(2, qubits));
  Matrix jz = Matrix::Zero(dim, dim);
  const double shift = (static_cast<double>(dim) - 1.0) / 2.0;
  for (Eigen::Index d = 0; d < dim; ++d) {
    jz(d, d) = Cx(static_cast<double>(d) - shift, 0.0);
  }
  const Cx prefactor = -std::exp(Cx(0.0, kPi / static_cast<double>(dim)));
  return prefactor * expm(Cx(0.0, -2.0 * kPi / static_cast<double>(dim)) * jz);
}

Matrix qft_matrix(int qubits) {
  require_qubits(qubits, "qft_matrix");
  const auto dim = static_cast<Eigen::Index>(ipow(2, qubits));
  Matrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << Cx(r, 0), Cx(r, 0), Cx(r, 0), Cx(-r, 0);
  Matrix walsh = Matrix::Identity(1, 1);
  for (int k = 0; k < qubits; ++k) walsh = kron(walsh, h);
  const Matrix im = im_operator(qubits);
  Matrix out(dim, dim);
  Vector column = walsh.col(0);
  for (Eigen::Index q = 0; q < dim; ++q) {
    out.col(q) = column;
    column = im * column;
  }
  return out;
}

Matrix qft_matrix_direct(int qubits) {
  require_qubits(qubits, "qft_matrix_direct");
  const auto dim = static_cast<Eigen::Index>(ipow(2, qubits));
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Matrix out(dim, dim);
  for (Eigen::Index p = 0; p < dim; ++p) {
    for (Eigen::Index q = 0; q < dim; ++q) {
      out(p, q) = scale * std::exp(Cx(0.0, -2.0 * kPi * static_cast<double>(p) *
                                               static_cast<double>(q) /
                                               static_cast<double>(dim)));
    }
  }
  return out;
}

}  // namespace eigensynth
