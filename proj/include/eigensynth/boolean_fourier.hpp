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

#include <cstdint>
#include <set>
#include <vector>

#include "eigensynth/matrix.hpp"

namespace eigensynth {

// Boolean functions live on the multiplicative domain: +1 encodes False
// (bit 0), -1 encodes True (bit 1). Bit r of an index word refers to
// position r, the r-th lowest digit.

/// A +-1 valued function of `arity` bits; values[s] is the output on the
/// interpretation with bit pattern s.
struct BooleanFunction {
  int arity = 0;
  std::vector<Cx> values;
};

/// Validating constructor; every value must be exactly +1 or -1.
BooleanFunction pm_function(int arity, std::vector<Cx> values);

/// Build from a truth bitmask: bit s of `truth_bits` set means True (-1).
BooleanFunction pm_from_bits(int arity, std::uint32_t truth_bits);

/// Back to {0,1} outputs (+1 -> 0, -1 -> 1).
std::vector<int> bits_from_pm(const BooleanFunction& g);

/// Unnormalized Walsh coefficients over parity characters:
/// coeffs[p] = sum_s (-1)^{popcount(p & s)} values[s].
struct WalshSpectrum {
  int arity = 0;
  std::vector<double> coeffs;
};

/// The parity-character operator chi_p = tensor over positions of Z^{bit}.
Matrix character_operator(std::uint32_t p, int arity);

/// Rank-one projector onto the computational basis state with bit pattern s,
/// as the tensor product of (I + (-1)^{bit} Z)/2 factors.
Matrix projector_from_bits(std::uint32_t s, int arity);

/// Projector onto "all variables in `vars` are 1"; free positions get
/// identity factors.
Matrix and_projector(std::uint32_t vars, int arity);

/// Direct O(4^n) Walsh transform.
WalshSpectrum walsh_transform(const BooleanFunction& g);

/// In-place butterfly, O(n 2^n); agrees with walsh_transform exactly.
WalshSpectrum walsh_transform_fast(const BooleanFunction& g);

/// The diagonal operator carrying g's outputs as eigenvalues, resynthesized
/// from the spectrum: G = 2^{-n} sum_p coeffs[p] chi_p.
Matrix quantum_boolean_operator(const BooleanFunction& g);

/// Householder reflection I - 2P through the range of the projector P.
/// Rejects inputs with ||P^2 - P|| above `tol`, reporting the defect.
Matrix householder(const Matrix& projector, double tol = 1e-9);

/// Inverse map P = (I - G)/2 for a self-inverse G; rejects non-involutions.
Matrix householder_inverse(const Matrix& self_inverse, double tol = 1e-9);

/// Positive-polarity Reed-Muller (algebraic normal) form of a {0,1} valued
/// function: f = constant XOR (XOR over monomials of AND of their variables).
struct ReedMullerForm {
  int arity = 0;
  std::set<std::uint32_t> monomials;  // nonempty variable subsets as bitmasks
  int constant = 0;
};

/// Moebius transform over GF(2) of the value vector (length 2^arity).
ReedMullerForm reed_muller(int arity, const std::vector<int>& values);

/// Evaluate the form on a bit pattern.
int evaluate_reed_muller(const ReedMullerForm& form, std::uint32_t point);

/// Multiplicative-domain factorization of the form:
/// G = (-1)^constant * prod over monomials of (I - 2 and_projector).
Matrix reed_muller_product(const ReedMullerForm& form);

}  // namespace eigensynth
