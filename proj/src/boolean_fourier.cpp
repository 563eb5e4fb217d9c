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

#include "eigensynth/boolean_fourier.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "eigensynth/interpolation.hpp"

namespace eigensynth {

namespace {

constexpr int kMaxBits = 20;  // dense 2^n vectors; anything bigger is a bug

void require_arity(int arity, const char* op) {
  if (arity < 1 || arity > kMaxBits) {
    throw std::invalid_argument(std::string(op) + ": arity " +
                                std::to_string(arity) + " out of range");
  }
}

void require_pm(const BooleanFunction& g, const char* op) {
  require_arity(g.arity, op);
  const std::size_t want = std::size_t{1} << g.arity;
  if (g.values.size() != want) {
    throw std::invalid_argument(std::string(op) + ": expected " +
                                std::to_string(want) + " values, got " +
                                std::to_string(g.values.size()));
  }
  for (std::size_t s = 0; s < g.values.size(); ++s) {
    const Cx& v = g.values[s];
    if (v != Cx(1.0, 0.0) && v != Cx(-1.0, 0.0)) {
      throw std::invalid_argument(std::string(op) + ": value at index " +
                                  std::to_string(s) + " is " +
                                  format_complex(v) + ", must be +1 or -1");
    }
  }
}

Matrix pauli_z() {
  Matrix z(2, 2);
  z << Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(-1, 0);
  return z;
}

}  // namespace

BooleanFunction pm_function(int arity, std::vector<Cx> values) {
  BooleanFunction g{arity, std::move(values)};
  require_pm(g, "pm_function");
  return g;
}

BooleanFunction pm_from_bits(int arity, std::uint32_t truth_bits) {
  require_arity(arity, "pm_from_bits");
  const std::size_t count = std::size_t{1} << arity;
  std::vector<Cx> values(count);
  for (std::size_t s = 0; s < count; ++s) {
    values[s] = (truth_bits >> s) & 1u ? Cx(-1.0, 0.0) : Cx(1.0, 0.0);
  }
  return BooleanFunction{arity, std::move(values)};
}

std::vector<int> bits_from_pm(const BooleanFunction& g) {
  require_pm(g, "bits_from_pm");
  std::vector<int> bits(g.values.size());
  for (std::size_t s = 0; s < g.values.size(); ++s) {
    bits[s] = g.values[s].real() < 0.0 ? 1 : 0;
  }
  return bits;
}

Matrix character_operator(std::uint32_t p, int arity) {
  require_arity(arity, "character_operator");
  const Matrix z = pauli_z();
  Matrix word = Matrix::Identity(1, 1);
  for (int pos = arity - 1; pos >= 0; --pos) {
    word = kron(word, (p >> pos) & 1u ? z : Matrix::Identity(2, 2));
  }
  return word;
}

Matrix projector_from_bits(std::uint32_t s, int arity) {
  require_arity(arity, "projector_from_bits");
  const Matrix z = pauli_z();
  const Matrix eye = Matrix::Identity(2, 2);
  Matrix word = Matrix::Identity(1, 1);
  for (int pos = arity - 1; pos >= 0; --pos) {
    const double sign = (s >> pos) & 1u ? -1.0 : 1.0;
    word = kron(word, 0.5 * (eye + sign * z));
  }
  return word;
}

Matrix and_projector(std::uint32_t vars, int arity) {
  require_arity(arity, "and_projector");
  Matrix pi1(2, 2);
  pi1 << Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0);
  Matrix word = Matrix::Identity(1, 1);
  for (int pos = arity - 1; pos >= 0; --pos) {
    word = kron(word, (vars >> pos) & 1u ? pi1 : Matrix::Identity(2, 2));
  }
  return word;
}

WalshSpectrum walsh_transform(const BooleanFunction& g) {
  require_pm(g, "walsh_transform");
  const std::size_t count = g.values.size();
  std::vector<double> coeffs(count, 0.0);
  for (std::size_t p = 0; p < count; ++p) {
    double acc = 0.0;
    for (std::size_t s = 0; s < count; ++s) {
      const int parity = std::popcount(p & s) & 1;
      acc += (parity ? -1.0 : 1.0) * g.values[s].real();
    }
    coeffs[p] = acc;
  }
  return WalshSpectrum{g.arity, std::move(coeffs)};
}

WalshSpectrum walsh_transform_fast(const BooleanFunction& g) {
  require_pm(g, "walsh_transform_fast");
  std::vector<double> a(g.values.size());
  for (std::size_t s = 0; s < a.size(); ++s) a[s] = g.values[s].real();
  for (int j = 0; j < g.arity; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t s = 0; s < a.size(); ++s) {
      if (s & bit) continue;
      const double lo = a[s];
      const double hi = a[s | bit];
      a[s] = lo + hi;
      a[s | bit] = lo - hi;
    }
  }
  return WalshSpectrum{g.arity, std::move(a)};
}

Matrix quantum_boolean_operator(const BooleanFunction& g) {
  const WalshSpectrum spectrum = walsh_transform(g);
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << g.arity);
  Matrix acc = Matrix::Zero(dim, dim);
  for (std::size_t p = 0; p < spectrum.coeffs.size(); ++p) {
    if (spectrum.coeffs[p] == 0.0) continue;
    acc += spectrum.coeffs[p] *
           character_operator(static_cast<std::uint32_t>(p), g.arity);
  }
  return acc / static_cast<double>(dim);
}

Matrix householder(const Matrix& projector, double tol) {
  if (projector.rows() != projector.cols()) {
    throw std::invalid_argument("householder: matrix is not square");
  }
  const double defect = max_abs_diff(projector * projector, projector);
  if (defect > tol) {
    throw std::invalid_argument(
        "householder: input is not idempotent, ||P^2 - P|| = " +
        std::to_string(defect));
  }
  return Matrix::Identity(projector.rows(), projector.rows()) - 2.0 * projector;
}

Matrix householder_inverse(const Matrix& self_inverse, double tol) {
  if (self_inverse.rows() != self_inverse.cols()) {
    throw std::invalid_argument("householder_inverse: matrix is not square");
  }
  const Matrix eye = Matrix::Identity(self_inverse.rows(), self_inverse.rows());
  const double defect = max_abs_diff(self_inverse * self_inverse, eye);
  if (defect > tol) {
    throw std::invalid_argument(
        "householder_inverse: input is not an involution, ||G^2 - I|| = " +
        std::to_string(defect));
  }
  return 0.5 * (eye - self_inverse);
}

ReedMullerForm reed_muller(int arity, const std::vector<int>& values) {
  require_arity(arity, "reed_muller");
  const std::size_t count = std::size_t{1} << arity;
  if (values.size() != count) {
    throw std::invalid_argument("reed_muller: expected " +
                                std::to_string(count) + " values, got " +
                                std::to_string(values.size()));
  }
  std::vector<int> a(count);
  for (std::size_t s = 0; s < count; ++s) {
    if (values[s] != 0 && values[s] != 1) {
      throw std::invalid_argument("reed_muller: value at index " +
                                  std::to_string(s) + " is " +
                                  std::to_string(values[s]) +
                                  ", must be 0 or 1");
    }
    a[s] = values[s];
  }
  // Binary Moebius transform: after processing bit j, a[s] holds the XOR of
  // f over the subcube below s in the first j+1 coordinates.
  for (int j = 0; j < arity; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t s = 0; s < count; ++s) {
      if (s & bit) a[s] ^= a[s ^ bit];
    }
  }
  ReedMullerForm form;
  form.arity = arity;
  form.constant = a[0];
  for (std::size_t s = 1; s < count; ++s) {
    if (a[s]) form.monomials.insert(static_cast<std::uint32_t>(s));
  }
  return form;
}

int evaluate_reed_muller(const ReedMullerForm& form, std::uint32_t point) {
  int acc = form.constant;
  for (const std::uint32_t vars : form.monomials) {
    if ((point & vars) == vars) acc ^= 1;
  }
  return acc;
}

Matrix reed_muller_product(const ReedMullerForm& form) {
  require_arity(form.arity, "reed_muller_product");
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << form.arity);
  Matrix acc = Matrix::Identity(dim, dim);
  for (const std::uint32_t vars : form.monomials) {
    if (vars == 0 || vars >> form.arity) {
      throw std::invalid_argument("reed_muller_product: monomial mask " +
                                  std::to_string(vars) +
                                  " invalid for arity " +
                                  std::to_string(form.arity));
    }
    acc = acc * (Matrix::Identity(dim, dim) -
                 2.0 * and_projector(vars, form.arity));
  }
  if (form.constant) acc = -acc;
  return acc;
}

}  // namespace eigensynth
