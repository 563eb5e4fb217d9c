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

#include "eigensynth/interpolation.hpp"

#include <cmath>
#include <random>

#include <doctest.h>

#include "support.hpp"

using namespace eigensynth;
using testsupport::random_alphabet;
using testsupport::random_entries;
using testsupport::random_unitary;

namespace {

Alphabet binary() { return Alphabet({Cx(0, 0), Cx(1, 0)}); }
Alphabet pm() { return Alphabet({Cx(1, 0), Cx(-1, 0)}); }
Alphabet ternary() { return Alphabet({Cx(1, 0), Cx(0, 0), Cx(-1, 0)}); }

Matrix diag_of(std::vector<Cx> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return m;
}

// Worst violation of the four projector laws for one spectral family.
double projector_law_defect(const SpectralFamily& family) {
  const int m = family.seed.alphabet.size();
  const auto dim = family.projectors[0].rows();
  double worst = 0.0;
  Matrix sum = Matrix::Zero(dim, dim);
  Matrix rebuilt = Matrix::Zero(dim, dim);
  for (int i = 0; i < m; ++i) {
    const Matrix& p = family.projectors[static_cast<std::size_t>(i)];
    worst = std::max(worst, max_abs_diff(p * p, p));
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      const Matrix zero = Matrix::Zero(dim, dim);
      worst = std::max(
          worst, max_abs_diff(p * family.projectors[static_cast<std::size_t>(j)], zero));
    }
    sum += p;
    rebuilt += family.seed.alphabet[i] * p;
  }
  worst = std::max(worst, max_abs_diff(sum, Matrix::Identity(dim, dim)));
  worst = std::max(worst, max_abs_diff(rebuilt, family.seed.matrix));
  return worst;
}

}  // namespace

TEST_CASE("alphabets reject duplicates and undersized value lists") {
  CHECK_THROWS_AS(Alphabet({Cx(1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet({Cx(1, 0), Cx(1, 0), Cx(0, 0)}),
                  degenerate_alphabet_error);
  // Collisions below the separation floor count as duplicates.
  CHECK_THROWS_AS(Alphabet({Cx(0.5, 0), Cx(0.5 + 1e-12, 0)}),
                  degenerate_alphabet_error);
  try {
    Alphabet({Cx(2, 0), Cx(1, 0), Cx(2, 0)});
    CHECK(false);
  } catch (const degenerate_alphabet_error& e) {
    const std::string what = e.what();
    CHECK(what.find("0") != std::string::npos);
    CHECK(what.find("2") != std::string::npos);
  }
}

TEST_CASE("alphabet lookup honors the tolerance") {
  const Alphabet a = ternary();
  CHECK(a.index_of(Cx(0, 0)).value() == 1);
  CHECK(a.index_of(Cx(-1 + 1e-12, 0)).value() == 2);
  CHECK(!a.index_of(Cx(0.5, 0)).has_value());
}

TEST_CASE("diagonal seeds carry their alphabet on the diagonal") {
  const SeedOperator seed = diagonal_seed(ternary());
  CHECK(max_abs_diff(seed.matrix, diag_of({Cx(1, 0), Cx(0, 0), Cx(-1, 0)})) ==
        0.0);
  CHECK(max_abs_diff(seed.basis, Matrix::Identity(3, 3)) == 0.0);
}

TEST_CASE("seed_in_basis conjugates the spectrum and rejects non-unitaries") {
  std::mt19937 gen(23);
  const Matrix u = random_unitary(gen, 2);
  const SeedOperator seed = seed_in_basis(pm(), u);
  CHECK(max_abs_diff(seed.matrix, u * diag_of({Cx(1, 0), Cx(-1, 0)}) * u.adjoint()) <
        1e-14);
  CHECK_THROWS_AS(seed_in_basis(pm(), 2.0 * Matrix::Identity(2, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(seed_in_basis(pm(), Matrix::Identity(3, 3)),
                  std::invalid_argument);
}

TEST_CASE("binary projectors are the basis projectors") {
  const SpectralFamily family = projectors_from_seed(diagonal_seed(binary()));
  CHECK(max_abs_diff(family.projectors[0], diag_of({Cx(1, 0), Cx(0, 0)})) <
        1e-15);
  CHECK(max_abs_diff(family.projectors[1], diag_of({Cx(0, 0), Cx(1, 0)})) <
        1e-15);
}

TEST_CASE("pm projectors are (I +- Z)/2") {
  const SpectralFamily family = projectors_from_seed(diagonal_seed(pm()));
  CHECK(max_abs_diff(family.projectors[0], diag_of({Cx(1, 0), Cx(0, 0)})) <
        1e-15);
  CHECK(max_abs_diff(family.projectors[1], diag_of({Cx(0, 0), Cx(1, 0)})) <
        1e-15);
}

TEST_CASE("spin-1 projectors match their quadratic closed forms") {
  const SeedOperator seed = diagonal_seed(ternary());
  const SpectralFamily family = projectors_from_seed(seed);
  const Matrix& lam = seed.matrix;
  const Matrix eye = Matrix::Identity(3, 3);
  // Independent closed forms for the spin-1 spectrum {+1, 0, -1}.
  const Matrix plus = 0.5 * lam * (lam + eye);
  const Matrix zero = eye - lam * lam;
  const Matrix minus = 0.5 * lam * (lam - eye);
  CHECK(max_abs_diff(family.projectors[0], plus) < 1e-15);
  CHECK(max_abs_diff(family.projectors[1], zero) < 1e-15);
  CHECK(max_abs_diff(family.projectors[2], minus) < 1e-15);
}

TEST_CASE("projector laws hold for random seeds") {
  std::mt19937 gen(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + trial % 4;
    const Alphabet alphabet = random_alphabet(gen, m);
    const SeedOperator seed =
        trial % 2 ? seed_in_basis(alphabet, random_unitary(gen, m))
                  : diagonal_seed(alphabet);
    CHECK(projector_law_defect(projectors_from_seed(seed)) < 1e-9);
  }
}

TEST_CASE("lift places the operator at the requested digit") {
  Matrix num(2, 2);
  num << Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0);
  const Matrix low = lift(num, 0, 2, 2);
  const Matrix high = lift(num, 1, 2, 2);
  CHECK(max_abs_diff(low, kron(Matrix::Identity(2, 2), num)) == 0.0);
  CHECK(max_abs_diff(high, kron(num, Matrix::Identity(2, 2))) == 0.0);
  // Position 0 reads the lowest digit: indices 1 and 3 have it set.
  CHECK(low(1, 1) == Cx(1, 0));
  CHECK(low(3, 3) == Cx(1, 0));
  CHECK(low(2, 2) == Cx(0, 0));

  CHECK_THROWS_AS(lift(num, 2, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(lift(num, -1, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(lift(num, 0, 2, 3), std::invalid_argument);
}

TEST_CASE("lift of a ternary seed matches index arithmetic") {
  const SeedOperator seed = diagonal_seed(ternary());
  for (int position = 0; position < 3; ++position) {
    const Matrix lifted = lift(seed.matrix, position, 3, 3);
    for (std::size_t s = 0; s < 27; ++s) {
      const Cx want = seed.alphabet[interpretation_digit(s, position, 3)];
      CHECK(std::abs(lifted(static_cast<Eigen::Index>(s),
                            static_cast<Eigen::Index>(s)) -
                     want) < 1e-15);
    }
  }
}

TEST_CASE("synthesize reproduces the classic binary tables") {
  const SeedOperator seed = diagonal_seed(binary());
  const LogicalOperator and2 = synthesize(
      make_table(binary(), 2, {Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0)}), seed);
  CHECK(max_abs_diff(and2.matrix,
                     diag_of({Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0)})) <
        1e-15);

  const LogicalOperator xor2 = synthesize(
      make_table(binary(), 2, {Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0)}), seed);
  CHECK(max_abs_diff(xor2.matrix,
                     diag_of({Cx(0, 0), Cx(1, 0), Cx(1, 0), Cx(0, 0)})) <
        1e-15);

  std::vector<Cx> or3(8, Cx(1, 0));
  or3[0] = Cx(0, 0);
  const LogicalOperator op = synthesize(make_table(binary(), 3, or3), seed);
  CHECK(max_abs_diff(op.matrix, diag_of(or3)) < 1e-15);
}

TEST_CASE("synthesize follows the seed basis") {
  std::mt19937 gen(31);
  const Matrix u = random_unitary(gen, 2);
  const SeedOperator seed = seed_in_basis(pm(), u);
  // The identity table gives back the seed itself.
  const LogicalOperator dictator =
      synthesize(make_table(pm(), 1, {Cx(1, 0), Cx(-1, 0)}), seed);
  CHECK(max_abs_diff(dictator.matrix, seed.matrix) < 1e-13);
  CHECK(verify_eigenlogic(dictator) < 1e-13);
}

TEST_CASE("synthesize rejects mismatched alphabets") {
  CHECK_THROWS_AS(
      synthesize(make_table(binary(), 1, {Cx(0, 0), Cx(1, 0)}),
                 diagonal_seed(pm())),
      std::invalid_argument);
}

TEST_CASE("make_table checks the entry count") {
  CHECK_THROWS_AS(make_table(binary(), 2, {Cx(0, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(make_table(binary(), 0, {}), std::invalid_argument);
}

TEST_CASE("arity-1 operators reduce to seed polynomials") {
  const SeedOperator seed = diagonal_seed(binary());
  const LogicalOperator ident =
      synthesize(make_table(binary(), 1, {Cx(0, 0), Cx(1, 0)}), seed);
  const std::vector<Cx> ident_coeffs = as_seed_polynomial(ident);
  REQUIRE(ident_coeffs.size() == 2);
  CHECK(std::abs(ident_coeffs[0]) < 1e-15);
  CHECK(std::abs(ident_coeffs[1] - Cx(1, 0)) < 1e-15);

  const LogicalOperator negation =
      synthesize(make_table(binary(), 1, {Cx(1, 0), Cx(0, 0)}), seed);
  const std::vector<Cx> neg_coeffs = as_seed_polynomial(negation);
  CHECK(std::abs(neg_coeffs[0] - Cx(1, 0)) < 1e-15);
  CHECK(std::abs(neg_coeffs[1] + Cx(1, 0)) < 1e-15);
}

TEST_CASE("seed polynomials evaluate back to the table") {
  std::mt19937 gen(37);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 2 + trial % 3;
    const Alphabet alphabet = random_alphabet(gen, m);
    const SeedOperator seed = diagonal_seed(alphabet);
    const TruthTable table =
        make_table(alphabet, 1, random_entries(gen, static_cast<std::size_t>(m)));
    const LogicalOperator op = synthesize(table, seed);
    const std::vector<Cx> coeffs = as_seed_polynomial(op);

    // Horner evaluation at each node must reproduce the table entry.
    for (int i = 0; i < m; ++i) {
      Cx value(0, 0);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        value = value * alphabet[i] + *it;
      }
      CHECK(std::abs(value - table.entries[static_cast<std::size_t>(i)]) <
            1e-9);
    }

    // And the matrix polynomial must reproduce the operator.
    Matrix poly = Matrix::Zero(m, m);
    Matrix power = Matrix::Identity(m, m);
    for (const Cx& c : coeffs) {
      poly += c * power;
      power = power * seed.matrix;
    }
    CHECK(max_abs_diff(poly, op.matrix) < 1e-9);
  }
}

TEST_CASE("as_seed_polynomial rejects multi-variable operators") {
  const SeedOperator seed = diagonal_seed(binary());
  const LogicalOperator and2 = synthesize(
      make_table(binary(), 2, {Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0)}), seed);
  CHECK_THROWS_AS(as_seed_polynomial(and2), std::invalid_argument);
}

TEST_CASE("verify_eigenlogic flags a wrong matrix") {
  const SeedOperator seed = diagonal_seed(binary());
  const TruthTable and_table =
      make_table(binary(), 2, {Cx(0, 0), Cx(0, 0), Cx(0, 0), Cx(1, 0)});
  LogicalOperator bogus{Matrix::Zero(4, 4), and_table, seed};
  CHECK(verify_eigenlogic(bogus) == doctest::Approx(1.0));

  const LogicalOperator good = synthesize(and_table, seed);
  CHECK(verify_eigenlogic(good) < 1e-15);
}

TEST_CASE("random tables synthesize faithfully and commute within a seed") {
  std::mt19937 gen(41);
  for (int trial = 0; trial < 15; ++trial) {
    const int m = 2 + trial % 2;
    const int n = 1 + trial % 3;
    const Alphabet alphabet = random_alphabet(gen, m);
    const SeedOperator seed =
        trial % 2 ? seed_in_basis(alphabet, random_unitary(gen, m))
                  : diagonal_seed(alphabet);
    const std::size_t count = ipow(m, n);
    const LogicalOperator a =
        synthesize(make_table(alphabet, n, random_entries(gen, count)), seed);
    const LogicalOperator b =
        synthesize(make_table(alphabet, n, random_entries(gen, count)), seed);
    CHECK(verify_eigenlogic(a) < 1e-10);
    CHECK(verify_eigenlogic(b) < 1e-10);
    CHECK(max_abs_diff(a.matrix * b.matrix, b.matrix * a.matrix) < 1e-9);
  }
}

TEST_CASE("the four single-variable pm operators are I, Z and their negatives") {
  const SeedOperator seed = diagonal_seed(pm());
  const Matrix z = diag_of({Cx(1, 0), Cx(-1, 0)});
  const Matrix eye = Matrix::Identity(2, 2);
  const auto table = [&](Cx a, Cx b) {
    return synthesize(make_table(pm(), 1, {a, b}), seed).matrix;
  };
  CHECK(max_abs_diff(table(Cx(1, 0), Cx(-1, 0)), z) < 1e-15);
  CHECK(max_abs_diff(table(Cx(-1, 0), Cx(1, 0)), -z) < 1e-15);
  CHECK(max_abs_diff(table(Cx(1, 0), Cx(1, 0)), eye) < 1e-15);
  CHECK(max_abs_diff(table(Cx(-1, 0), Cx(-1, 0)), -eye) < 1e-15);
}
