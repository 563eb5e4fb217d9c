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
#include <cstdio>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace eigensynth {

namespace {

// Detection threshold for the structural dispatch in expm. Stricter than any
// equivalence tolerance so a near-miss falls through to the series instead of
// being misclassified.
constexpr double kStructureTol = 1e-14;

std::string shape_of(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(const Matrix& a, const char* op) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument(std::string(op) + ": matrix is " +
                                shape_of(a) + ", expected square");
  }
}

bool nearly_diagonal(const Matrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j && std::abs(a(i, j)) > kStructureTol) return false;
    }
  }
  return true;
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matmul: incompatible shapes " + shape_of(a) +
                                " and " + shape_of(b));
  }
  return a * b;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

Matrix adjoint(const Matrix& a) { return a.adjoint(); }

Matrix expm(const Matrix& a) {
  require_square(a, "expm");
  const Eigen::Index n = a.rows();
  if (nearly_diagonal(a)) {
    Matrix out = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) out(i, i) = std::exp(a(i, i));
    return out;
  }
  // A scalar multiple of an involution satisfies a^2 = c^2 I; the exponential
  // then collapses to cosh(c) I + sinh(c)/c a. The nilpotent case (c ~ 0)
  // falls through to the series.
  const Matrix sq = a * a;
  const Cx gamma = sq(0, 0);
  const double scale = std::max(1.0, std::abs(gamma));
  bool involution = true;
  for (Eigen::Index i = 0; i < n && involution; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Cx want = (i == j) ? gamma : Cx(0.0, 0.0);
      if (std::abs(sq(i, j) - want) > kStructureTol * scale) {
        involution = false;
        break;
      }
    }
  }
  if (involution && std::abs(gamma) > kStructureTol) {
    const Cx c = std::sqrt(gamma);
    return std::cosh(c) * Matrix::Identity(n, n) + (std::sinh(c) / c) * a;
  }
  return expm_series(a);
}

Matrix expm_series(const Matrix& a) {
  require_square(a, "expm_series");
  const Eigen::Index n = a.rows();
  const double norm = a.size() == 0 ? 0.0 : a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix b = a / std::pow(2.0, squarings);
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = Matrix::Identity(n, n);
  for (int k = 1; k <= 64; ++k) {
    term = (term * b) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("max_abs_diff: shapes " + shape_of(a) +
                                " and " + shape_of(b) + " differ");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

Vector apply(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) {
    throw std::invalid_argument("apply: operator " + shape_of(a) +
                                " cannot act on a vector of dimension " +
                                std::to_string(v.size()));
  }
  return a * v;
}

Matrix identity(Eigen::Index dim) { return Matrix::Identity(dim, dim); }

bool is_finite(const Matrix& a) { return a.allFinite(); }

std::string format_complex(const Cx& z, int precision) {
  char buf[64];
  auto fmt = [&](double x) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, x);
    return std::string(buf);
  };
  const double re = z.real();
  const double im = z.imag();
  if (im == 0.0) return fmt(re);
  if (re == 0.0) return fmt(im) + "i";
  return fmt(re) + (im < 0.0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

}  // namespace eigensynth
