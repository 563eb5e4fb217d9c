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

#include <string>

#include "eigensynth/report.hpp"

namespace eigensynth {

/// Construction routes selectable at the command line. Not every route
/// applies to every catalog entry; a mismatch raises
/// unsupported_route_error.
enum class Route {
  Canonical,    // the defining matrix (or interpolation from the table)
  Polynomial,   // spectral polynomial in lifted seeds
  Householder,  // reflection I - 2P through a projector
  Exp,          // product of operator-word exponentials
  TProduct,     // product of (daggered) parity T factors
  TPolynomial,  // polynomial identity in phase gates diag(1, root)
};

Route parse_route(const std::string& name);
const char* to_string(Route route);

/// A catalog request: gate name or identifier such as "MIN3" or "QFT(3)",
/// construction route, and the phase-gate root letter (T, S or Z) for the
/// t-polynomial route.
struct GateRequest {
  std::string name;
  Route route = Route::Canonical;
  std::string root = "T";
};

/// Build the requested operator. The returned report carries the matrix and
/// metadata but no verdict.
MatrixReport resolve_gate(const GateRequest& request);

/// Resolve one comparison operand: either "file:<path>" (a table spec to
/// synthesize) or "<name>[:<route>[:<root>]]".
MatrixReport resolve_operand(const std::string& operand);

}  // namespace eigensynth
