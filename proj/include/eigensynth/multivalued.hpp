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

#include "eigensynth/interpolation.hpp"
#include "eigensynth/matrix.hpp"

namespace eigensynth {

// Ternary logic on the balanced alphabet {+1, 0, -1}: +1 is false, -1 is
// true, 0 the undetermined middle. The seed is the spin-1 z component with
// that spectrum.

/// Spin-1 seed diag(+1, 0, -1).
SeedOperator lz_seed();

/// Ternary Min connective: diagonal truth table over two spin-1 systems,
/// position 1 carrying U and position 0 carrying V. "Min" picks the value
/// closer to false in the +1 > 0 > -1 truth ordering.
TruthTable min_table();
TruthTable max_table();

/// Min as the degree-2 polynomial (U + V + U^2 + V^2 - UV - U^2 V^2)/2 in the
/// lifted seeds.
Matrix min_operator();

/// Max as (U + V - U^2 - V^2 + UV + U^2 V^2)/2.
Matrix max_operator();

/// Seed for the balanced-ternary half adder, diag(-1, 0, +1): digits in
/// numeric order so arithmetic identities read off directly.
SeedOperator half_adder_seed();

/// Truth tables of the half adder: first the sum digit, then the carry.
std::pair<TruthTable, TruthTable> half_adder_tables();

/// Sum digit A + C - (3/2) A^2 C - (3/2) A C^2 and carry (A C^2 + A^2 C)/2
/// as polynomials in the lifted half-adder seeds (A at position 1, C at
/// position 0). Satisfies a + c = sum + 3 carry exactly.
std::pair<Matrix, Matrix> half_adder_operators();

/// Number of qubits accepted by the Fourier-side operators.
inline constexpr int kMinFourierQubits = 1;
inline constexpr int kMaxFourierQubits = 4;

/// Diagonal Fourier seed diag(e^{-2 pi i d / 2^n}), d = 0 .. 2^n - 1. Its
/// spectrum is the full set of 2^n-th roots of unity, all distinct.
Matrix im_operator(int qubits);

/// Same operator from lifted one-qubit projectors: exponent
/// -(2 pi i / 2^n) sum_k 2^k P_k with P_k the |1> projector at position k.
Matrix im_from_projectors(int qubits);

/// Same operator through the spin picture: -e^{i pi / 2^n} e^{-2 pi i Jz/2^n}
/// with Jz = diag(d - (2^n - 1)/2).
Matrix im_from_jz(int qubits);

/// Discrete Fourier transform built column by column: column q is the
/// q-th power of the Fourier seed applied to the uniform superposition,
/// entries 2^{-n/2} e^{-2 pi i p q / 2^n}.
Matrix qft_matrix(int qubits);

/// Entrywise closed form of the same matrix, kept separate as an oracle.
Matrix qft_matrix_direct(int qubits);

}  // namespace eigensynth
