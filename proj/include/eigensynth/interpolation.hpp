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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "eigensynth/matrix.hpp"

namespace eigensynth {

/// Minimum pairwise separation between alphabet values. Lagrange weights grow
/// as separations shrink, so closer spectra are rejected outright.
inline constexpr double kAlphabetTol = 1e-9;

class degenerate_alphabet_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered list of at least two pairwise distinct logical values. Doubles as
/// the eigenvalue spectrum of a seed operator.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Cx> values);

  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Cx>& values() const { return values_; }
  const Cx& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }

  /// Index of the alphabet value within `tol` of `v`, if any.
  std::optional<int> index_of(const Cx& v, double tol = kAlphabetTol) const;

 private:
  std::vector<Cx> values_;
};

/// Whether two alphabets agree elementwise within `tol`.
bool same_alphabet(const Alphabet& a, const Alphabet& b,
                   double tol = kAlphabetTol);

/// A normal operator whose spectrum is exactly the alphabet: the single
/// variable every logical operator over that alphabet is a polynomial of.
struct SeedOperator {
  Alphabet alphabet;
  Matrix basis;   // unitary; column i is the eigenvector for alphabet[i]
  Matrix matrix;  // basis * diag(alphabet) * basis^dagger
};

/// Seed diagonal in the computational basis.
SeedOperator diagonal_seed(Alphabet alphabet);

/// Seed with the given eigenbasis (columns of a unitary).
SeedOperator seed_in_basis(Alphabet alphabet, const Matrix& basis);

/// A function from n-tuples of alphabet values to complex truth values.
/// entries[s] is the output on the interpretation whose base-m digits are the
/// digits of s, position 0 being the lowest digit.
struct TruthTable {
  Alphabet alphabet;
  int arity = 1;
  std::vector<Cx> entries;
};

TruthTable make_table(Alphabet alphabet, int arity, std::vector<Cx> entries);

/// base^exp for small non-negative integers.
std::size_t ipow(int base, int exp);

/// Digit of interpretation `index` at `position` in base m.
int interpretation_digit(std::size_t index, int position, int m);

/// The complete family of Lagrange eigenprojectors of one seed.
struct SpectralFamily {
  SeedOperator seed;
  std::vector<Matrix> projectors;  // projectors[i] belongs to alphabet[i]
};

/// A synthesized operator together with the data it was built from.
struct LogicalOperator {
  Matrix matrix;
  TruthTable table;
  SeedOperator seed;
};

/// Eigenprojector for each alphabet value of the seed, by Lagrange
/// interpolation on the seed's spectrum:
///   P_i = prod_{j != i} (seed - a_j I) / (a_i - a_j).
SpectralFamily projectors_from_seed(const SeedOperator& seed);

/// Embed a single-system operator at `position` of an `arity`-fold product
/// space: identity factors above, op, identity factors below. Position 0 is
/// the lowest digit, i.e. the rightmost Kronecker factor.
Matrix lift(const Matrix& op, int position, int arity, int local_dim);

/// Spectral synthesis: the unique member of the seed's commutant algebra
/// whose action on the product eigenbasis realizes the table,
///   F = sum_s entries[s] * P_{d_{n-1}(s)} x ... x P_{d_0(s)}.
LogicalOperator synthesize(const TruthTable& table, const SeedOperator& seed);

/// Coefficients c_0..c_{m-1} with F = sum_k c_k seed^k, for arity-1 operators,
/// via Newton divided differences on the alphabet nodes.
std::vector<Cx> as_seed_polynomial(const LogicalOperator& op);

/// Brute-force check that matrix|s> = entries[s]|s> on every lifted seed
/// eigenvector; returns the worst Euclidean deviation.
double verify_eigenlogic(const LogicalOperator& op);

}  // namespace eigensynth
