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

// Command-line front end: synthesize operators from truth-table specs, build
// catalog gates through their various construction routes, print Walsh
// spectra, and compare any two constructions.
//
// Exit codes: 0 success (and verification passed), 1 verification failed,
// 2 parse or validation error, 3 degenerate alphabet, 4 incompatible
// request (unavailable route, dimension mismatch).

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "eigensynth/boolean_fourier.hpp"
#include "eigensynth/gates.hpp"
#include "eigensynth/interpolation.hpp"
#include "eigensynth/multivalued.hpp"
#include "eigensynth/report.hpp"
#include "eigensynth/routes.hpp"
#include "eigensynth/table_spec.hpp"

namespace {

using namespace eigensynth;

struct OutputOptions {
  bool json = false;
  bool text = false;

  bool want_json() const { return json; }
  bool want_color() const {
    return isatty(STDOUT_FILENO) != 0 && std::getenv("NO_COLOR") == nullptr;
  }
};

void add_output_flags(CLI::App* cmd, OutputOptions* opts) {
  auto* json_flag = cmd->add_flag("--json", opts->json, "emit JSON");
  auto* text_flag =
      cmd->add_flag("--text", opts->text, "emit readable text (default)");
  json_flag->excludes(text_flag);
}

template <typename Report>
void print_report(const Report& report, const OutputOptions& opts) {
  if (opts.want_json()) {
    std::fputs(to_json(report).c_str(), stdout);
  } else {
    std::fputs(to_text(report, opts.want_color()).c_str(), stdout);
  }
}

int run_synthesize(const std::string& path, bool oracle, double tol,
                   const OutputOptions& opts) {
  const TableSpec spec = load_table_spec(path);
  const TruthTable table = to_truth_table(spec);
  const SeedOperator seed = diagonal_seed(table.alphabet);
  LogicalOperator op = synthesize(table, seed);

  MatrixReport report;
  report.name = spec.name.empty() ? "table" : spec.name;
  report.matrix = std::move(op.matrix);
  report.alphabet = spec.alphabet;
  report.arity = spec.arity;
  report.route = "interpolation";

  bool pass = true;
  if (oracle) {
    op.matrix = report.matrix;
    const double deviation = verify_eigenlogic(op);
    pass = deviation <= tol;
    report.verdict = Verdict{"eigenlogic-oracle", deviation, pass};
  }
  print_report(report, opts);
  return pass ? 0 : 1;
}

int run_gate(const std::string& name, const std::string& route,
             const std::string& root, bool verify, double tol,
             const OutputOptions& opts) {
  GateRequest request{name, parse_route(route), root};
  MatrixReport report = resolve_gate(request);

  bool pass = true;
  if (verify) {
    const MatrixReport canonical =
        resolve_gate(GateRequest{name, Route::Canonical, root});
    const double diff = max_abs_diff(report.matrix, canonical.matrix);
    pass = diff <= tol;
    report.verdict = Verdict{name + ":canonical", diff, pass};
  }
  print_report(report, opts);
  return pass ? 0 : 1;
}

int run_fourier(const std::string& path, const OutputOptions& opts) {
  const TableSpec spec = load_table_spec(path);
  const TruthTable table = to_truth_table(spec);
  if (table.alphabet.size() != 2 || std::abs(table.alphabet[0] - Cx(1, 0)) > kAlphabetTol ||
      std::abs(table.alphabet[1] - Cx(-1, 0)) > kAlphabetTol) {
    throw unsupported_route_error(
        "fourier needs the two-valued alphabet [+1, -1], spec \"" +
        spec.name + "\" uses something else");
  }
  const BooleanFunction g = pm_function(table.arity, table.entries);
  const WalshSpectrum spectrum = walsh_transform(g);

  // Resynthesize from the spectrum and report how far it lands from the
  // diagonal truth operator.
  const Matrix direct = quantum_boolean_operator(g);
  const auto dim = static_cast<Eigen::Index>(g.values.size());
  Matrix diagonal = Matrix::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) diagonal(s, s) = g.values[s];

  WalshReport report;
  report.name = spec.name.empty() ? "table" : spec.name;
  report.arity = g.arity;
  report.coeffs = spectrum.coeffs;
  report.residual = max_abs_diff(direct, diagonal);
  print_report(report, opts);
  return 0;
}

int run_verify(const std::string& left, const std::string& right, double tol,
               const OutputOptions& opts) {
  const MatrixReport a = resolve_operand(left);
  const MatrixReport b = resolve_operand(right);
  if (a.matrix.rows() != b.matrix.rows()) {
    throw unsupported_route_error(
        "dimension mismatch: " + left + " is " +
        std::to_string(a.matrix.rows()) + "x" + std::to_string(a.matrix.cols()) +
        ", " + right + " is " + std::to_string(b.matrix.rows()) + "x" +
        std::to_string(b.matrix.cols()));
  }
  VerifyReport report;
  report.left = left;
  report.right = right;
  report.dim = static_cast<int>(a.matrix.rows());
  report.max_abs_diff = max_abs_diff(a.matrix, b.matrix);
  report.tol = tol;
  report.pass = report.max_abs_diff <= tol;
  print_report(report, opts);
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "eigensynth: spectral synthesis of logical operators.\n"
      "Truth tables over finite alphabets become operators whose eigenvalues\n"
      "are the truth values; catalog gates come with alternative construction\n"
      "routes that can be cross-verified."};
  app.require_subcommand(1);
  app.footer(
      "Exit codes:\n"
      "  0  success (verification passed where requested)\n"
      "  1  verification failed\n"
      "  2  parse or validation error\n"
      "  3  degenerate alphabet\n"
      "  4  incompatible request (route unavailable, dimension mismatch)");

  OutputOptions synth_opts;
  std::string synth_path;
  bool synth_oracle = false;
  double synth_tol = kEquivTol;
  auto* synth = app.add_subcommand(
      "synthesize", "interpolate an operator from a truth-table spec");
  synth->add_option("spec", synth_path, "JSON truth-table spec file")
      ->required();
  synth->add_flag("--oracle", synth_oracle,
                  "check every interpretation against the table");
  synth->add_option("--tol", synth_tol, "oracle tolerance");
  add_output_flags(synth, &synth_opts);

  OutputOptions gate_opts;
  std::string gate_name;
  std::string gate_route = "canonical";
  std::string gate_root = "T";
  bool gate_verify = false;
  double gate_tol = kEquivTol;
  auto* gate = app.add_subcommand(
      "gate", "build a catalog operator through a chosen route");
  gate->add_option("name", gate_name,
                   "gate (Z, X, H, S, T, Tdg, CZ, CNOT, SWAP, CCZ, TOFFOLI) "
                   "or identifier (MIN3, MAX3, HA_SUM, HA_CARRY, IM(n), "
                   "QFT(n))")
      ->required();
  gate->add_option("--route", gate_route,
                   "canonical, polynomial, householder, exp, t-product or "
                   "t-polynomial");
  gate->add_option("--root", gate_root,
                   "phase-gate root for t-polynomial: T, S or Z")
      ->check(CLI::IsMember({"T", "S", "Z"}));
  gate->add_flag("--verify", gate_verify, "compare against the canonical form");
  gate->add_option("--tol", gate_tol, "verification tolerance");
  add_output_flags(gate, &gate_opts);

  OutputOptions fourier_opts;
  std::string fourier_path;
  auto* fourier = app.add_subcommand(
      "fourier", "Walsh spectrum of a +-1 valued truth-table spec");
  fourier->add_option("spec", fourier_path, "JSON truth-table spec file")
      ->required();
  add_output_flags(fourier, &fourier_opts);

  OutputOptions verify_opts;
  std::string verify_left;
  std::string verify_right;
  double verify_tol = kEquivTol;
  auto* verify = app.add_subcommand(
      "verify", "compare two constructions entry by entry");
  verify->add_option("left", verify_left,
                     "NAME[:route[:root]] or file:<spec.json>")
      ->required();
  verify->add_option("right", verify_right,
                     "NAME[:route[:root]] or file:<spec.json>")
      ->required();
  verify->add_option("--tol", verify_tol, "comparison tolerance");
  add_output_flags(verify, &verify_opts);

  int rc = 0;
  synth->callback([&] {
    rc = run_synthesize(synth_path, synth_oracle, synth_tol, synth_opts);
  });
  gate->callback([&] {
    rc = run_gate(gate_name, gate_route, gate_root, gate_verify, gate_tol,
                  gate_opts);
  });
  fourier->callback([&] { rc = run_fourier(fourier_path, fourier_opts); });
  verify->callback(
      [&] { rc = run_verify(verify_left, verify_right, verify_tol, verify_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const degenerate_alphabet_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const unsupported_route_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const spec_parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
