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
#include <string>

namespace eigensynth {

Alphabet::Alphabet(std::vector<Cx> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("Alphabet: need at least 2 values, got " +
                                std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    for (std::size_t j = i + 1; j < values_.size(); ++j) {
      if (std::abs(values_[i] - values_[j]) <= kAlphabetTol) {
        throw degenerate_alphabet_error(
            "Alphabet: values " + std::to_string(i) + " and " +
            std::to_string(j) + " collide: " + format_complex(values_[i]) +
            " vs " + format_complex(values_[j]));
      }
    }
  }
}

std::optional<int> Alphabet::index_of(const Cx& v, double tol) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (std::abs(values_[i] - v) <= tol) return static_cast<int>(i);
  }
  return std::nullopt;
}

bool same_alphabet(const Alphabet& a, const Alphabet& b, double tol) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

SeedOperator diagonal_seed(Alphabet alphabet) {
  const int m = alphabet.size();
  Matrix lam = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) lam(i, i) = alphabet[i];
  return SeedOperator{std::move(alphabet), Matrix::Identity(m, m), std::move(lam)};
}

SeedOperator seed_in_basis(Alphabet alphabet, const Matrix& basis) {
  const int m = alphabet.size();
  if (basis.rows() != m || basis.cols() != m) {
    throw std::invalid_argument("seed_in_basis: basis is " +
                                std::to_string(basis.rows()) + "x" +
                                std::to_string(basis.cols()) + ", expected " +
                                std::to_string(m) + "x" + std::to_string(m));
  }
  const double defect =
      max_abs_diff(basis * basis.adjoint(), Matrix::Identity(m, m));
  if (defect > 1e-9) {
    throw std::invalid_argument(
        "seed_in_basis: basis is not unitary (defect " +
        std::to_string(defect) + ")");
  }
  Matrix diag = Matrix::Zero(m, m);
  for (int i = 0; i < m; ++i) diag(i, i) = alphabet[i];
  Matrix seed = basis * diag * basis.adjoint();
  return SeedOperator{std::move(alphabet), basis, std::move(seed)};
}

TruthTable make_table(Alphabet alphabet, int arity, std::vector<Cx> entries) {
  if (arity < 1) {
    throw std::invalid_argument("make_table: arity must be positive, got " +
                                std::to_string(arity));
  }
  const std::size_t want = ipow(alphabet.size(), arity);
  if (entries.size() != want) {
    throw std::invalid_argument(
        "make_table: expected " + std::to_string(want) + " entries for arity " +
        std::to_string(arity) + " over " + std::to_string(alphabet.size()) +
        " values, got " + std::to_string(entries.size()));
  }
  return TruthTable{std::move(alphabet), arity, std::move(entries)};
}

std::size_t ipow(int base, int exp) {
  std::size_t out = 1;
  for (int k = 0; k < exp; ++k) out *= static_cast<std::size_t>(base);
  return out;
}

int interpretation_digit(std::size_t index, int position, int m) {
  return static_cast<int>((index / ipow(m, position)) % static_cast<std::size_t>(m));
}

SpectralFamily projectors_from_seed(const SeedOperator& seed) {
  const int m = seed.alphabet.size();
  std::vector<Matrix> projectors;
  projectors.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    Matrix p = Matrix::Identity(m, m);
    for (int j = 0; j < m; ++j) {
      if (j == i) continue;
      p = p * (seed.matrix - seed.alphabet[j] * Matrix::Identity(m, m)) /
          (seed.alphabet[i] - seed.alphabet[j]);
    }
    projectors.push_back(std::move(p));
  }
  return SpectralFamily{seed, std::move(projectors)};
}

Matrix lift(const Matrix& op, int position, int arity, int local_dim) {
  if (op.rows() != local_dim || op.cols() != local_dim) {
    throw std::invalid_argument("lift: operator is " +
                                std::to_string(op.rows()) + "x" +
                                std::to_string(op.cols()) +
                                ", expected local dimension " +
                                std::to_string(local_dim));
  }
  if (position < 0 || position >= arity) {
    throw std::out_of_range("lift: position " + std::to_string(position) +
                            " out of range for arity " + std::to_string(arity));
  }
  const auto high = static_cast<Eigen::Index>(ipow(local_dim, arity - 1 - position));
  const auto low = static_cast<Eigen::Index>(ipow(local_dim, position));
  return kron(Matrix::Identity(high, high),
              kron(op, Matrix::Identity(low, low)));
}

LogicalOperator synthesize(const TruthTable& table, const SeedOperator& seed) {
  if (!same_alphabet(table.alphabet, seed.alphabet)) {
    throw std::invalid_argument(
        "synthesize: table and seed alphabets differ");
  }
  const int m = seed.alphabet.size();
  const int n = table.arity;
  const auto dim = static_cast<Eigen::Index>(ipow(m, n));
  const SpectralFamily family = projectors_from_seed(seed);
  Matrix acc = Matrix::Zero(dim, dim);
  for (std::size_t s = 0; s < table.entries.size(); ++s) {
    Matrix word = Matrix::Identity(1, 1);
    for (int pos = n - 1; pos >= 0; --pos) {
      word = kron(word, family.projectors[static_cast<std::size_t>(
                            interpretation_digit(s, pos, m))]);
    }
    acc += table.entries[s] * word;
  }
  return LogicalOperator{std::move(acc), table, seed};
}

std::vector<Cx> as_seed_polynomial(const LogicalOperator& op) {
  if (op.table.arity != 1) {
    throw std::invalid_argument(
        "as_seed_polynomial: arity " + std::to_string(op.table.arity) +
        " is unsupported, only arity-1 operators reduce to one variable");
  }
  const int m = op.seed.alphabet.size();
  const std::vector<Cx>& x = op.seed.alphabet.values();
  // Divided differences in place: after the loop dd[k] = f[x_0..x_k].
  std::vector<Cx> dd = op.table.entries;
  for (int level = 1; level < m; ++level) {
    for (int i = m - 1; i >= level; --i) {
      dd[static_cast<std::size_t>(i)] =
          (dd[static_cast<std::size_t>(i)] - dd[static_cast<std::size_t>(i - 1)]) /
          (x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i - level)]);
    }
  }
  // Expand the Newton form to monomial coefficients.
  std::vector<Cx> coeffs{dd[static_cast<std::size_t>(m - 1)]};
  for (int k = m - 2; k >= 0; --k) {
    std::vector<Cx> next(coeffs.size() + 1, Cx(0.0, 0.0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= x[static_cast<std::size_t>(k)] * coeffs[j];
    }
    next[0] += dd[static_cast<std::size_t>(k)];
    coeffs = std::move(next);
  }
  return coeffs;
}

double verify_eigenlogic(const LogicalOperator& op) {
  const int m = op.seed.alphabet.size();
  const int n = op.table.arity;
  double worst = 0.0;
  for (std::size_t s = 0; s < op.table.entries.size(); ++s) {
    Matrix v = Matrix::Ones(1, 1);
    for (int pos = n - 1; pos >= 0; --pos) {
      v = kron(v, op.seed.basis.col(interpretation_digit(s, pos, m)));
    }
    const double dev = (op.matrix * v - op.table.entries[s] * v).norm();
    worst = std::max(worst, dev);
  }
  return worst;
}

}  // namespace eigensynth
