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

#include "eigensynth/matrix.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>
#include <unsupported/Eigen/MatrixFunctions>

#include "support.hpp"

using namespace eigensynth;
using testsupport::random_hermitian;
using testsupport::random_matrix;

namespace {

Matrix mat2(Cx a, Cx b, Cx c, Cx d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

const Matrix kZ = mat2(1, 0, 0, -1);
const Matrix kX = mat2(0, 1, 1, 0);

Matrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  return mat2(r, r, r, -r);
}

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("matmul multiplies and checks shapes") {
  CHECK(max_abs_diff(matmul(Matrix::Identity(2, 2), kZ), kZ) == 0.0);
  CHECK(max_abs_diff(matmul(kZ, kZ), Matrix::Identity(2, 2)) == 0.0);
  const Matrix hzh = matmul(matmul(hadamard(), kZ), hadamard());
  CHECK(max_abs_diff(hzh, kX) < 1e-15);
  CHECK_THROWS_AS(matmul(Matrix::Identity(2, 2), Matrix::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("kron builds tensor products with the left factor on top") {
  const Matrix zz = kron(kZ, kZ);
  Matrix want = Matrix::Zero(4, 4);
  want(0, 0) = Cx(1, 0);
  want(1, 1) = Cx(-1, 0);
  want(2, 2) = Cx(-1, 0);
  want(3, 3) = Cx(1, 0);
  CHECK(max_abs_diff(zz, want) == 0.0);

  const Matrix p1 = mat2(0, 0, 0, 1);
  const Matrix p11 = kron(p1, p1);
  CHECK(p11(3, 3) == Cx(1, 0));
  CHECK(std::abs(p11.sum() - Cx(1, 0)) == 0.0);
}

TEST_CASE("kron satisfies the mixed-product law") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index da = 2 + trial % 3;
    const Eigen::Index db = 2 + (trial / 3) % 3;
    const Matrix a = random_matrix(gen, da, da);
    const Matrix b = random_matrix(gen, db, db);
    const Matrix c = random_matrix(gen, da, da);
    const Matrix d = random_matrix(gen, db, db);
    CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("adjoint conjugates the T phase") {
  Matrix t = Matrix::Identity(2, 2);
  t(1, 1) = std::exp(Cx(0, kPi / 4));
  const Matrix td = adjoint(t);
  CHECK(std::abs(td(1, 1) - std::exp(Cx(0, -kPi / 4))) < 1e-16);
  CHECK(max_abs_diff(matmul(t, td), Matrix::Identity(2, 2)) < 1e-15);
}

TEST_CASE("expm on a diagonal argument exponentiates entrywise") {
  Matrix arg = Matrix::Zero(2, 2);
  arg(1, 1) = Cx(0, kPi);
  const Matrix g = expm(arg);
  CHECK(max_abs_diff(g, kZ) < 1e-15);

  CHECK(max_abs_diff(expm(Matrix::Zero(3, 3)), Matrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("expm on involution multiples uses the cos/sin closed form") {
  for (const double theta : {0.1, -0.7, kPi / 4, kPi / 2, 3.0}) {
    const Matrix arg = Cx(0, theta) * kX;
    const Matrix got = expm(arg);
    const Matrix want = std::cos(theta) * Matrix::Identity(2, 2) +
                        Cx(0, std::sin(theta)) * kX;
    CHECK(max_abs_diff(got, want) < 1e-14);
  }
}

TEST_CASE("expm closed forms agree with the series path") {
  std::mt19937 gen(11);
  // Diagonal arguments.
  for (int trial = 0; trial < 5; ++trial) {
    Matrix arg = Matrix::Zero(3, 3);
    for (int i = 0; i < 3; ++i) {
      arg(i, i) = random_matrix(gen, 1, 1)(0, 0);
    }
    CHECK(max_abs_diff(expm(arg), expm_series(arg)) < 1e-12);
  }
  // Involution multiples.
  for (const double theta : {0.3, -1.2, 2.5}) {
    const Matrix arg = Cx(0, theta) * kron(kZ, kX);
    CHECK(max_abs_diff(expm(arg), expm_series(arg)) < 1e-12);
  }
  // General arguments, with an independent library oracle.
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix arg = random_matrix(gen, 4, 4);
    const Matrix oracle = arg.exp();
    CHECK(max_abs_diff(expm(arg), oracle) < 1e-12);
    CHECK(max_abs_diff(expm_series(arg), oracle) < 1e-12);
  }
}

TEST_CASE("expm handles nilpotent arguments through the series") {
  Matrix nil = Matrix::Zero(2, 2);
  nil(0, 1) = Cx(3, 1);
  Matrix want = Matrix::Identity(2, 2);
  want(0, 1) = Cx(3, 1);
  CHECK(max_abs_diff(expm(nil), want) < 1e-15);
}

TEST_CASE("expm of commuting arguments multiplies") {
  std::mt19937 gen(13);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix m = random_matrix(gen, 3, 3, 0.2);
    const Matrix a = m * m;           // polynomials in m commute
    const Matrix b = m + 2.0 * m * m * m;
    CHECK(max_abs_diff(expm(a + b), expm(a) * expm(b)) < 1e-10);
  }
}

TEST_CASE("expm of i theta H is unitary for Hermitian H") {
  std::mt19937 gen(17);
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix h = random_hermitian(gen, 4);
    const Matrix u = expm(Cx(0, 0.9) * h);
    CHECK(max_abs_diff(u * u.adjoint(), Matrix::Identity(4, 4)) < 1e-12);
  }
}

TEST_CASE("expm rejects non-square arguments") {
  CHECK_THROWS_AS(expm(Matrix::Zero(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(expm_series(Matrix::Zero(3, 2)), std::invalid_argument);
}

TEST_CASE("max_abs_diff measures the worst entry") {
  CHECK(max_abs_diff(kZ, -kZ) == 2.0);
  CHECK(max_abs_diff(kZ, kZ) == 0.0);
  CHECK_THROWS_AS(max_abs_diff(kZ, Matrix::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("apply acts on vectors and checks shapes") {
  Vector v(2);
  v << Cx(0, 0), Cx(1, 0);
  const Vector w = eigensynth::apply(kZ, v);
  CHECK(std::abs(w(1) - Cx(-1, 0)) == 0.0);
  Vector bad(3);
  bad.setZero();
  CHECK_THROWS_AS(eigensynth::apply(kZ, bad), std::invalid_argument);
}

TEST_CASE("is_finite flags bad entries") {
  Matrix m = Matrix::Identity(2, 2);
  CHECK(is_finite(m));
  m(0, 1) = Cx(std::nan(""), 0);
  CHECK(!is_finite(m));
}

TEST_CASE("format_complex renders the common shapes") {
  CHECK(format_complex(Cx(0.5, -0.5)) == "0.5-0.5i");
  CHECK(format_complex(Cx(-1, 0)) == "-1");
  CHECK(format_complex(Cx(0, 2)) == "2i");
  CHECK(format_complex(Cx(0, 0)) == "0");
}
