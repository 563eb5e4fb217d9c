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

#include <optional>
#include <string>
#include <vector>

#include "eigensynth/matrix.hpp"

namespace eigensynth {

// Reports serialize to a canonical JSON layout: fixed key order, fixed
// indentation, floats at 17 significant digits, negative zero normalized.
// Parsing our own output and re-serializing reproduces the bytes exactly.

struct Verdict {
  std::string target;
  double max_abs_diff = 0.0;
  bool pass = false;
};

/// An operator matrix with its provenance and an optional verification
/// verdict. `alphabet` stays empty and `arity` is the qubit count when the
/// operator came from the gate catalog rather than a table.
struct MatrixReport {
  std::string name;
  Matrix matrix;
  std::vector<Cx> alphabet;
  int arity = 0;
  std::string route;
  std::optional<Verdict> verdict;
};

std::string to_json(const MatrixReport& report);
MatrixReport matrix_report_from_json(const std::string& text);
std::string to_text(const MatrixReport& report, bool color);

/// Walsh spectrum of a +-1 function plus the residual of resynthesizing the
/// diagonal operator from it.
struct WalshReport {
  std::string name;
  int arity = 0;
  std::vector<double> coeffs;
  double residual = 0.0;
};

std::string to_json(const WalshReport& report);
WalshReport walsh_report_from_json(const std::string& text);
std::string to_text(const WalshReport& report, bool color);

/// Outcome of comparing two operator routes.
struct VerifyReport {
  std::string left;
  std::string right;
  int dim = 0;
  double max_abs_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
};

std::string to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const std::string& text);
std::string to_text(const VerifyReport& report, bool color);

}  // namespace eigensynth
