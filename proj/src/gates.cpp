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

#include "eigensynth/gates.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "eigensynth/interpolation.hpp"

namespace eigensynth {

namespace {

constexpr double kPi = std::numbers::pi;

// Internal consistency bound for routes that must agree exactly up to
// floating-point rounding.
constexpr double kCrossCheckTol = 1e-12;

Matrix pauli_z() {
  Matrix z(2, 2);
  z << Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(-1, 0);
  return z;
}

Matrix pauli_x() {
  Matrix x(2, 2);
  x << Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0);
  return x;
}

Matrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix h(2, 2);
  h << Cx(r, 0), Cx(r, 0), Cx(r, 0), Cx(-r, 0);
  return h;
}

// Projector onto |1> of one qubit.
Matrix projector_one() {
  Matrix p(2, 2);
  p << Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0);
  return p;
}

// Projector onto the X-basis minus state, H P H.
Matrix projector_minus() {
  return hadamard() * projector_one() * hadamard();
}

void cross_check(const Matrix& a, const Matrix& b, const char* what) {
  if (max_abs_diff(a, b) > kCrossCheckTol) {
    throw std::logic_error(std::string(what) + ": internal routes disagree");
  }
}

}  // namespace

GateName parse_gate_name(const std::string& name) {
  if (name == "Z") return GateName::Z;
  if (name == "X") return GateName::X;
  if (name == "H") return GateName::H;
  if (name == "S") return GateName::S;
  if (name == "T") return GateName::T;
  if (name == "Tdg") return GateName::Tdg;
  if (name == "CZ") return GateName::CZ;
  if (name == "CNOT") return GateName::CNOT;
  if (name == "SWAP") return GateName::SWAP;
  if (name == "CCZ") return GateName::CCZ;
  if (name == "TOFFOLI") return GateName::TOFFOLI;
  throw std::invalid_argument(
      "unknown gate \"" + name +
      "\"; expected one of Z, X, H, S, T, Tdg, CZ, CNOT, SWAP, CCZ, TOFFOLI");
}

const char* to_string(GateName name) {
  switch (name) {
    case GateName::Z: return "Z";
    case GateName::X: return "X";
    case GateName::H: return "H";
    case GateName::S: return "S";
    case GateName::T: return "T";
    case GateName::Tdg: return "Tdg";
    case GateName::CZ: return "CZ";
    case GateName::CNOT: return "CNOT";
    case GateName::SWAP: return "SWAP";
    case GateName::CCZ: return "CCZ";
    case GateName::TOFFOLI: return "TOFFOLI";
  }
  return "?";
}

Cx omega() { return std::exp(Cx(0.0, kPi / 4.0)); }

Cx omega_s() { return std::exp(Cx(0.0, kPi / 2.0)); }

Matrix standard_gate(GateName name) {
  switch (name) {
    case GateName::Z:
      return pauli_z();
    case GateName::X:
      return pauli_x();
    case GateName::H:
      return hadamard();
    case GateName::S: {
      Matrix s = Matrix::Identity(2, 2);
      s(1, 1) = omega_s();
      return s;
    }
    case GateName::T: {
      Matrix t = Matrix::Identity(2, 2);
      t(1, 1) = omega();
      return t;
    }
    case GateName::Tdg: {
      Matrix t = Matrix::Identity(2, 2);
      t(1, 1) = std::conj(omega());
      return t;
    }
    case GateName::CZ: {
      Matrix cz = Matrix::Identity(4, 4);
      cz(3, 3) = Cx(-1, 0);
      return cz;
    }
    case GateName::CNOT: {
      Matrix cx = Matrix::Zero(4, 4);
      cx(0, 0) = cx(1, 1) = Cx(1, 0);
      cx(2, 3) = cx(3, 2) = Cx(1, 0);
      return cx;
    }
    case GateName::SWAP: {
      Matrix sw = Matrix::Zero(4, 4);
      sw(0, 0) = sw(3, 3) = Cx(1, 0);
      sw(1, 2) = sw(2, 1) = Cx(1, 0);
      return sw;
    }
    case GateName::CCZ: {
      Matrix ccz = Matrix::Identity(8, 8);
      ccz(7, 7) = Cx(-1, 0);
      return ccz;
    }
    case GateName::TOFFOLI: {
      Matrix to = Matrix::Identity(8, 8);
      to(6, 6) = to(7, 7) = Cx(0, 0);
      to(6, 7) = to(7, 6) = Cx(1, 0);
      return to;
    }
  }
  throw std::logic_error("standard_gate: unhandled name");
}

Matrix cz_polynomial() {
  const Matrix z1 = lift(pauli_z(), 1, 2, 2);
  const Matrix z0 = lift(pauli_z(), 0, 2, 2);
  return 0.5 * (Matrix::Identity(4, 4) + z1 + z0 - z1 * z0);
}

Matrix cnot_construction() {
  const Matrix z1 = lift(pauli_z(), 1, 2, 2);
  const Matrix x0 = lift(pauli_x(), 0, 2, 2);
  const Matrix poly = 0.5 * (Matrix::Identity(4, 4) + z1 + x0 - z1 * x0);
  const Matrix reflection =
      Matrix::Identity(4, 4) - 2.0 * kron(projector_one(), projector_minus());
  cross_check(poly, reflection, "cnot_construction");
  return poly;
}

Matrix ccz_construction() {
  const Matrix p = projector_one();
  const Matrix reflection =
      Matrix::Identity(8, 8) - 2.0 * kron(p, kron(p, p));
  cross_check(reflection, standard_gate(GateName::CCZ), "ccz_construction");
  return reflection;
}

Matrix toffoli_construction() {
  const Matrix h0 = lift(hadamard(), 0, 3, 2);
  const Matrix conjugated = h0 * ccz_construction() * h0;
  const Matrix z2 = lift(pauli_z(), 2, 3, 2);
  const Matrix z1 = lift(pauli_z(), 1, 3, 2);
  const Matrix x0 = lift(pauli_x(), 0, 3, 2);
  const Matrix poly =
      0.25 * (3.0 * Matrix::Identity(8, 8) + z2 + z1 + x0 - z2 * z1 -
              z2 * x0 - z1 * x0 + z2 * z1 * x0);
  cross_check(conjugated, poly, "toffoli_construction");
  cross_check(conjugated, standard_gate(GateName::TOFFOLI),
              "toffoli_construction");
  return conjugated;
}

Matrix word_operator(const std::string& word) {
  if (word.empty()) {
    throw std::invalid_argument("word_operator: empty word");
  }
  Matrix acc = Matrix::Identity(1, 1);
  for (const char c : word) {
    switch (c) {
      case 'I': acc = kron(acc, Matrix::Identity(2, 2)); break;
      case 'Z': acc = kron(acc, pauli_z()); break;
      case 'X': acc = kron(acc, pauli_x()); break;
      default:
        throw std::invalid_argument(std::string("word_operator: letter '") +
                                    c + "' not in {I, Z, X}");
    }
  }
  return acc;
}

GateFactorization exp_factorization(GateName name) {
  GateFactorization f;
  switch (name) {
    case GateName::CZ:
      f.qubits = 2;
      f.global_phase = std::exp(Cx(0.0, kPi / 4.0));
      f.factors = {{-kPi / 4.0, "ZI"}, {-kPi / 4.0, "IZ"}, {kPi / 4.0, "ZZ"}};
      return f;
    case GateName::CNOT:
      f.qubits = 2;
      f.global_phase = std::exp(Cx(0.0, kPi / 4.0));
      f.factors = {{-kPi / 4.0, "ZI"}, {-kPi / 4.0, "IX"}, {kPi / 4.0, "ZX"}};
      return f;
    case GateName::CCZ:
      f.qubits = 3;
      f.global_phase = std::exp(Cx(0.0, kPi / 8.0));
      f.factors = {{-kPi / 8.0, "ZII"}, {-kPi / 8.0, "IZI"},
                   {-kPi / 8.0, "IIZ"}, {kPi / 8.0, "ZIZ"},
                   {kPi / 8.0, "ZZI"},  {kPi / 8.0, "IZZ"},
                   {-kPi / 8.0, "ZZZ"}};
      return f;
    case GateName::TOFFOLI:
      f.qubits = 3;
      f.global_phase = std::exp(Cx(0.0, kPi / 8.0));
      f.factors = {{-kPi / 8.0, "ZII"}, {-kPi / 8.0, "IZI"},
                   {-kPi / 8.0, "IIX"}, {kPi / 8.0, "ZIX"},
                   {kPi / 8.0, "ZZI"},  {kPi / 8.0, "IZX"},
                   {-kPi / 8.0, "ZZX"}};
      return f;
    default:
      throw unsupported_route_error(std::string("exp_factorization: no phase "
                                                "factorization for ") +
                                    to_string(name));
  }
}

Matrix evaluate(const GateFactorization& factorization) {
  if (factorization.qubits < 1) {
    throw std::invalid_argument("evaluate: factorization has no qubit count");
  }
  const auto dim =
      static_cast<Eigen::Index>(ipow(2, factorization.qubits));
  Matrix acc = factorization.global_phase * Matrix::Identity(dim, dim);
  for (const ExpFactor& factor : factorization.factors) {
    if (static_cast<int>(factor.word.size()) != factorization.qubits) {
      throw std::invalid_argument("evaluate: word \"" + factor.word +
                                  "\" does not span " +
                                  std::to_string(factorization.qubits) +
                                  " qubits");
    }
    acc = acc * expm(Cx(0.0, factor.angle) * word_operator(factor.word));
  }
  return acc;
}

Matrix t_xor_factor(std::uint32_t vars, int arity, bool dagger) {
  if (arity < 1 || vars >> arity) {
    throw std::invalid_argument("t_xor_factor: mask " + std::to_string(vars) +
                                " invalid for arity " + std::to_string(arity));
  }
  const Cx w = dagger ? std::conj(omega()) : omega();
  const auto dim = static_cast<Eigen::Index>(ipow(2, arity));
  Matrix out = Matrix::Identity(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    if (std::popcount(static_cast<std::uint32_t>(s) & vars) & 1) out(s, s) = w;
  }
  return out;
}

TProductForm t_product_ccz() {
  TProductForm form;
  form.qubits = 3;
  form.factors = {{0b001, false}, {0b010, false}, {0b100, false},
                  {0b110, true},  {0b101, true},  {0b011, true},
                  {0b111, false}};
  return form;
}

Matrix evaluate_t_product(const TProductForm& form) {
  if (form.qubits < 1) {
    throw std::invalid_argument("evaluate_t_product: form has no qubit count");
  }
  const auto dim = static_cast<Eigen::Index>(ipow(2, form.qubits));
  Matrix acc = Matrix::Identity(dim, dim);
  for (const TParityFactor& factor : form.factors) {
    acc = acc * t_xor_factor(factor.vars, form.qubits, factor.dagger);
  }
  return acc;
}

std::string t_factor_label(const TParityFactor& factor, int qubits) {
  if (qubits < 1 || qubits > 3) {
    throw std::invalid_argument("t_factor_label: only up to 3 variables");
  }
  static const char letters[] = {'x', 'y', 'z'};
  std::string expr;
  for (int pos = qubits - 1; pos >= 0; --pos) {
    if ((factor.vars >> pos) & 1u) {
      if (!expr.empty()) expr += '^';
      expr += letters[qubits - 1 - pos];
    }
  }
  return (factor.dagger ? std::string("Tdg(") : std::string("T(")) + expr + ")";
}

Matrix t_polynomial_ccz(const Cx& root) {
  const bool ok = std::abs(root - omega()) < 1e-12 ||
                  std::abs(root - omega_s()) < 1e-12 ||
                  std::abs(root - Cx(-1.0, 0.0)) < 1e-12;
  if (!ok) {
    throw std::invalid_argument(
        "t_polynomial_ccz: root " + format_complex(root) +
        " not supported; use omega, i or -1");
  }
  Matrix q = Matrix::Identity(2, 2);
  q(1, 1) = root;
  const Matrix q2 = lift(q, 2, 3, 2);
  const Matrix q1 = lift(q, 1, 3, 2);
  const Matrix q0 = lift(q, 0, 3, 2);
  const Matrix eye = Matrix::Identity(8, 8);
  const Cx c = 2.0 / std::pow(root - Cx(1.0, 0.0), 3.0);
  return eye + c * (eye - q2 - q1 - q0 + q2 * q1 + q2 * q0 + q1 * q0 -
                    q2 * q1 * q0);
}

Cx expectation(const Matrix& op, const Vector& psi) {
  if (op.rows() != op.cols() || op.cols() != psi.size()) {
    throw std::invalid_argument(
        "expectation: operator and state dimensions do not match");
  }
  const double norm = psi.norm();
  if (std::abs(norm - 1.0) > 1e-6) {
    throw std::invalid_argument("expectation: state norm " +
                                std::to_string(norm) +
                                " deviates from 1 by more than 1e-6");
  }
  return psi.dot(op * psi);
}

}  // namespace eigensynth
