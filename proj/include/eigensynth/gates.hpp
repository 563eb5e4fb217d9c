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
#include <stdexcept>
#include <string>
#include <vector>

#include "eigensynth/matrix.hpp"

namespace eigensynth {

/// Raised when a gate/route combination is not available (exit code 4 at the
/// command line), as opposed to malformed input.
class unsupported_route_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class GateName { Z, X, H, S, T, Tdg, CZ, CNOT, SWAP, CCZ, TOFFOLI };

GateName parse_gate_name(const std::string& name);
const char* to_string(GateName name);

/// e^{i pi/4}, the eighth root of unity on the T gate's diagonal.
Cx omega();
/// e^{i pi/2} = i, the corresponding root for the S gate.
Cx omega_s();

/// Canonical matrix of a named gate. Multi-qubit gates follow the convention
/// that position 0 is the lowest digit (rightmost tensor factor); controlled
/// gates keep their controls on the higher positions and the target at
/// position 0.
Matrix standard_gate(GateName name);

/// CZ as the arity-2 spectral polynomial (I + Z_1 + Z_0 - Z_1 Z_0)/2.
Matrix cz_polynomial();

/// CNOT built two ways, cross-checked internally before returning:
/// the mixed polynomial (I + Z_1 + X_0 - Z_1 X_0)/2 and the reflection
/// I - 2 (P x PX), P the control-on projector on position 1 and PX the
/// X-basis minus projector on position 0.
Matrix cnot_construction();

/// CCZ as the reflection I - 2 (P x P x P), cross-checked against the
/// diagonal form.
Matrix ccz_construction();

/// Toffoli as H_0 CCZ H_0, cross-checked against its degree-3 polynomial in
/// (Z_2, Z_1, X_0) and against the canonical permutation.
Matrix toffoli_construction();

/// One factor e^{i angle W} of a phase factorization; the word spells the
/// tensor operator with one letter in {I, Z, X} per position, leftmost letter
/// being the highest position.
struct ExpFactor {
  double angle = 0.0;
  std::string word;
};

/// An ordered product global_phase * prod_k e^{i angle_k W_k}.
struct GateFactorization {
  int qubits = 0;
  Cx global_phase{1.0, 0.0};
  std::vector<ExpFactor> factors;
};

/// The tensor operator a word spells out.
Matrix word_operator(const std::string& word);

/// Exact phase factorizations for CZ, CNOT, CCZ and TOFFOLI; other gates
/// raise unsupported_route_error.
GateFactorization exp_factorization(GateName name);

/// Multiply a factorization out.
Matrix evaluate(const GateFactorization& factorization);

/// One factor of a T-phase product: T applied to the parity (XOR) of the
/// positions in `vars`, optionally daggered.
struct TParityFactor {
  std::uint32_t vars = 0;
  bool dagger = false;
};

struct TProductForm {
  int qubits = 0;
  std::vector<TParityFactor> factors;
};

/// Diagonal operator with entry omega^{+-parity(s & vars)} at s.
Matrix t_xor_factor(std::uint32_t vars, int arity, bool dagger);

/// The seven-factor T-gate product equal to CCZ: one T per variable, one
/// daggered T per pairwise parity, one T on the triple parity.
TProductForm t_product_ccz();

Matrix evaluate_t_product(const TProductForm& form);

/// Human-readable label such as "Tdg(x^y)" for a parity factor, variables
/// named x, y, z from the highest position down.
std::string t_factor_label(const TParityFactor& factor, int qubits);

/// CCZ as a polynomial identity in commuting single-qubit phase gates
/// diag(1, root): I + 2 (root-1)^{-3} (I - Q_2 - Q_1 - Q_0 + Q_2 Q_1
/// + Q_2 Q_0 + Q_1 Q_0 - Q_2 Q_1 Q_0). Valid roots are omega (T), i (S)
/// and -1 (Z); anything else is rejected.
Matrix t_polynomial_ccz(const Cx& root);

/// <psi| op |psi> for a normalized state; the norm may deviate from 1 by at
/// most 1e-6.
Cx expectation(const Matrix& op, const Vector& psi);

}  // namespace eigensynth
