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

#include <complex>
#include <string>

#include <Eigen/Dense>

namespace eigensynth {

using Cx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Default absolute tolerance for operator equivalence. All gate entries
/// handled here are O(1), so no relative scaling is applied.
inline constexpr double kEquivTol = 1e-10;

/// Matrix product with an explicit shape check.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Kronecker product, `a` being the high-order (leftmost) factor.
Matrix kron(const Matrix& a, const Matrix& b);

/// Conjugate transpose.
Matrix adjoint(const Matrix& a);

/// Matrix exponential. Dispatches to closed forms when the argument is
/// diagonal (elementwise exponential) or a scalar multiple of an involution
/// (exp(cM) = cosh(c) I + sinh(c) M for M^2 = I), and to scaling-and-squaring
/// with a truncated series otherwise.
Matrix expm(const Matrix& a);

/// The general scaling-and-squaring path of expm, callable directly so the
/// closed forms can be cross-checked against it.
Matrix expm_series(const Matrix& a);

/// Max over entries of |a_ij - b_ij|; the engine's sole equivalence metric.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Matrix-vector product with an explicit shape check.
Vector apply(const Matrix& a, const Vector& v);

Matrix identity(Eigen::Index dim);

bool is_finite(const Matrix& a);

/// "a+bi" rendering used in error messages and text output.
std::string format_complex(const Cx& z, int precision = 6);

}  // namespace eigensynth
