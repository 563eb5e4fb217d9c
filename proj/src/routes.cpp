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

#include "eigensynth/routes.hpp"

#include <utility>

#include "eigensynth/boolean_fourier.hpp"
#include "eigensynth/gates.hpp"
#include "eigensynth/interpolation.hpp"
#include "eigensynth/multivalued.hpp"
#include "eigensynth/table_spec.hpp"

namespace eigensynth {

namespace {

const std::vector<Cx> kTernaryValues = {Cx(1, 0), Cx(0, 0), Cx(-1, 0)};
const std::vector<Cx> kBalancedValues = {Cx(-1, 0), Cx(0, 0), Cx(1, 0)};

Cx root_from_letter(const std::string& letter) {
  if (letter == "T") return omega();
  if (letter == "S") return omega_s();
  if (letter == "Z") return Cx(-1.0, 0.0);
  throw std::invalid_argument("unknown root letter \"" + letter +
                              "\"; expected T, S or Z");
}

// "IM(3)" / "QFT(2)" style identifier; returns the qubit count or -1.
int parenthesized_count(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix + "(", 0) != 0 || name.back() != ')') return -1;
  const std::string inner =
      name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
  if (inner.empty() || inner.find_first_not_of("0123456789") !=
                           std::string::npos) {
    throw std::invalid_argument("malformed identifier \"" + name +
                                "\"; expected " + prefix + "(n)");
  }
  return std::stoi(inner);
}

[[noreturn]] void reject_route(const std::string& name, Route route) {
  throw unsupported_route_error("route " + std::string(to_string(route)) +
                                " is not available for " + name);
}

Matrix projector_minus() {
  const Matrix h = standard_gate(GateName::H);
  return h * and_projector(1, 1) * h;
}

// Degree-3 polynomial form of the Toffoli gate in (Z_2, Z_1, X_0).
Matrix toffoli_polynomial() {
  return 0.25 * (3.0 * Matrix::Identity(8, 8) + word_operator("ZII") +
                 word_operator("IZI") + word_operator("IIX") -
                 word_operator("ZZI") - word_operator("ZIX") -
                 word_operator("IZX") + word_operator("ZZX"));
}

Matrix standard_route(GateName gate, Route route, const Cx& root) {
  const Matrix h0_3 = lift(standard_gate(GateName::H), 0, 3, 2);
  switch (route) {
    case Route::Canonical:
      return standard_gate(gate);
    case Route::Polynomial:
      switch (gate) {
        case GateName::CZ: return cz_polynomial();
        case GateName::CNOT: return cnot_construction();
        case GateName::CCZ: return t_polynomial_ccz(Cx(-1.0, 0.0));
        case GateName::TOFFOLI: return toffoli_polynomial();
        default: reject_route(to_string(gate), route);
      }
    case Route::Householder:
      switch (gate) {
        case GateName::Z: return householder(and_projector(1, 1));
        case GateName::X: return householder(projector_minus());
        case GateName::CZ: return householder(and_projector(0b11, 2));
        case GateName::CNOT:
          return householder(kron(and_projector(1, 1), projector_minus()));
        case GateName::CCZ: return householder(and_projector(0b111, 3));
        case GateName::TOFFOLI:
          return householder(kron(and_projector(0b11, 2), projector_minus()));
        default: reject_route(to_string(gate), route);
      }
    case Route::Exp:
      switch (gate) {
        case GateName::CZ:
        case GateName::CNOT:
        case GateName::CCZ:
        case GateName::TOFFOLI:
          return evaluate(exp_factorization(gate));
        default: reject_route(to_string(gate), route);
      }
    case Route::TProduct:
      switch (gate) {
        case GateName::CCZ: return evaluate_t_product(t_product_ccz());
        case GateName::TOFFOLI:
          return h0_3 * evaluate_t_product(t_product_ccz()) * h0_3;
        default: reject_route(to_string(gate), route);
      }
    case Route::TPolynomial:
      switch (gate) {
        case GateName::CCZ: return t_polynomial_ccz(root);
        case GateName::TOFFOLI: return h0_3 * t_polynomial_ccz(root) * h0_3;
        default: reject_route(to_string(gate), route);
      }
  }
  throw std::logic_error("standard_route: unhandled route");
}

int qubit_count(GateName gate) {
  switch (gate) {
    case GateName::CZ:
    case GateName::CNOT:
    case GateName::SWAP:
      return 2;
    case GateName::CCZ:
    case GateName::TOFFOLI:
      return 3;
    default:
      return 1;
  }
}

MatrixReport ternary_report(const std::string& name, Route route) {
  const bool balanced = name == "HA_SUM" || name == "HA_CARRY";
  if (route != Route::Canonical && route != Route::Polynomial) {
    reject_route(name, route);
  }
  Matrix matrix;
  if (route == Route::Canonical) {
    if (name == "MIN3") {
      matrix = synthesize(min_table(), lz_seed()).matrix;
    } else if (name == "MAX3") {
      matrix = synthesize(max_table(), lz_seed()).matrix;
    } else {
      const auto [sum, carry] = half_adder_tables();
      matrix = synthesize(name == "HA_SUM" ? sum : carry, half_adder_seed())
                   .matrix;
    }
  } else {
    if (name == "MIN3") {
      matrix = min_operator();
    } else if (name == "MAX3") {
      matrix = max_operator();
    } else {
      auto [sum, carry] = half_adder_operators();
      matrix = name == "HA_SUM" ? std::move(sum) : std::move(carry);
    }
  }
  MatrixReport report;
  report.name = name;
  report.matrix = std::move(matrix);
  report.alphabet = balanced ? kBalancedValues : kTernaryValues;
  report.arity = 2;
  report.route = to_string(route);
  return report;
}

}  // namespace

Route parse_route(const std::string& name) {
  if (name == "canonical") return Route::Canonical;
  if (name == "polynomial") return Route::Polynomial;
  if (name == "householder") return Route::Householder;
  if (name == "exp") return Route::Exp;
  if (name == "t-product") return Route::TProduct;
  if (name == "t-polynomial") return Route::TPolynomial;
  throw std::invalid_argument(
      "unknown route \"" + name +
      "\"; expected canonical, polynomial, householder, exp, t-product or "
      "t-polynomial");
}

const char* to_string(Route route) {
  switch (route) {
    case Route::Canonical: return "canonical";
    case Route::Polynomial: return "polynomial";
    case Route::Householder: return "householder";
    case Route::Exp: return "exp";
    case Route::TProduct: return "t-product";
    case Route::TPolynomial: return "t-polynomial";
  }
  return "?";
}

MatrixReport resolve_gate(const GateRequest& request) {
  if (request.name == "MIN3" || request.name == "MAX3" ||
      request.name == "HA_SUM" || request.name == "HA_CARRY") {
    return ternary_report(request.name, request.route);
  }
  const int im_qubits = parenthesized_count(request.name, "IM");
  const int qft_qubits = parenthesized_count(request.name, "QFT");
  if (im_qubits >= 0 || qft_qubits >= 0) {
    if (request.route != Route::Canonical) {
      reject_route(request.name, request.route);
    }
    MatrixReport report;
    report.name = request.name;
    report.matrix =
        im_qubits >= 0 ? im_operator(im_qubits) : qft_matrix(qft_qubits);
    report.arity = im_qubits >= 0 ? im_qubits : qft_qubits;
    report.route = to_string(Route::Canonical);
    return report;
  }
  const GateName gate = parse_gate_name(request.name);
  const Cx root = root_from_letter(request.root);
  MatrixReport report;
  report.name = request.name;
  report.matrix = standard_route(gate, request.route, root);
  report.arity = qubit_count(gate);
  report.route = to_string(request.route);
  if (request.route == Route::TPolynomial) {
    report.route += ":" + request.root;
  }
  return report;
}

MatrixReport resolve_operand(const std::string& operand) {
  if (operand.rfind("file:", 0) == 0) {
    const TableSpec spec = load_table_spec(operand.substr(5));
    const TruthTable table = to_truth_table(spec);
    const SeedOperator seed = diagonal_seed(table.alphabet);
    LogicalOperator op = synthesize(table, seed);
    MatrixReport report;
    report.name = spec.name;
    report.matrix = std::move(op.matrix);
    report.alphabet = spec.alphabet;
    report.arity = spec.arity;
    report.route = "interpolation";
    return report;
  }
  GateRequest request;
  const std::size_t first = operand.find(':');
  if (first == std::string::npos) {
    request.name = operand;
  } else {
    request.name = operand.substr(0, first);
    const std::size_t second = operand.find(':', first + 1);
    if (second == std::string::npos) {
      request.route = parse_route(operand.substr(first + 1));
    } else {
      request.route = parse_route(
          operand.substr(first + 1, second - first - 1));
      request.root = operand.substr(second + 1);
    }
  }
  return resolve_gate(request);
}

}  // namespace eigensynth
