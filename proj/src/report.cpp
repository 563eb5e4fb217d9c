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

#include "eigensynth/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace eigensynth {

namespace {

using nlohmann::json;

// 17 significant digits round-trip IEEE doubles exactly; negative zero is
// normalized away so reparsing cannot change the bytes.
std::string fmt_double(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("report: non-finite number");
  }
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

std::string pair_of(const Cx& z) {
  return "[" + fmt_double(z.real()) + "," + fmt_double(z.imag()) + "]";
}

std::string pass_label(bool pass, bool color) {
  if (!color) return pass ? "PASS" : "FAIL";
  return pass ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// Bit pattern of p with the highest position leftmost.
std::string bit_label(std::size_t p, int arity) {
  std::string out;
  for (int pos = arity - 1; pos >= 0; --pos) {
    out += ((p >> pos) & 1u) ? '1' : '0';
  }
  return out;
}

std::string z_word(std::size_t p, int arity) {
  std::string out;
  for (int pos = arity - 1; pos >= 0; --pos) {
    out += ((p >> pos) & 1u) ? 'Z' : 'I';
  }
  return out;
}

double number_at(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw std::invalid_argument(std::string("report: missing number \"") +
                                key + "\"");
  }
  return j[key].get<double>();
}

std::string string_at(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw std::invalid_argument(std::string("report: missing string \"") +
                                key + "\"");
  }
  return j[key].get<std::string>();
}

Cx cx_at(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw std::invalid_argument("report: complex entries are [re,im] pairs");
  }
  return Cx(j[0].get<double>(), j[1].get<double>());
}

json parse(const std::string& text) {
  json doc = json::parse(text);
  if (!doc.is_object()) {
    throw std::invalid_argument("report: document must be a JSON object");
  }
  return doc;
}

}  // namespace

std::string to_json(const MatrixReport& report) {
  const Eigen::Index rows = report.matrix.rows();
  const Eigen::Index cols = report.matrix.cols();
  std::string out = "{\n";
  out += "  \"name\": " + json_escape(report.name) + ",\n";
  out += "  \"dim\": " + std::to_string(rows) + ",\n";
  out += "  \"entries\": [\n";
  for (Eigen::Index i = 0; i < rows; ++i) {
    out += "    [";
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (j) out += ",";
      out += pair_of(report.matrix(i, j));
    }
    out += i + 1 < rows ? "],\n" : "]\n";
  }
  out += "  ],\n";
  out += "  \"metadata\": {\n";
  out += "    \"alphabet\": [";
  for (std::size_t i = 0; i < report.alphabet.size(); ++i) {
    if (i) out += ",";
    out += pair_of(report.alphabet[i]);
  }
  out += "],\n";
  out += "    \"arity\": " + std::to_string(report.arity) + ",\n";
  out += "    \"route\": " + json_escape(report.route) + "\n";
  out += report.verdict ? "  },\n" : "  }\n";
  if (report.verdict) {
    out += "  \"verdict\": {\n";
    out += "    \"target\": " + json_escape(report.verdict->target) + ",\n";
    out += "    \"max_abs_diff\": " + fmt_double(report.verdict->max_abs_diff) +
           ",\n";
    out += std::string("    \"pass\": ") +
           (report.verdict->pass ? "true" : "false") + "\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

MatrixReport matrix_report_from_json(const std::string& text) {
  const json doc = parse(text);
  MatrixReport report;
  report.name = string_at(doc, "name");
  const int dim = static_cast<int>(number_at(doc, "dim"));
  if (!doc.contains("entries") || !doc["entries"].is_array() ||
      static_cast<int>(doc["entries"].size()) != dim) {
    throw std::invalid_argument("report: \"entries\" must hold dim rows");
  }
  report.matrix = Matrix(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const json& row = doc["entries"][static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw std::invalid_argument("report: row " + std::to_string(i) +
                                  " must hold dim entries");
    }
    for (int j = 0; j < dim; ++j) {
      report.matrix(i, j) = cx_at(row[static_cast<std::size_t>(j)]);
    }
  }
  if (!doc.contains("metadata") || !doc["metadata"].is_object()) {
    throw std::invalid_argument("report: missing \"metadata\"");
  }
  const json& meta = doc["metadata"];
  if (!meta.contains("alphabet") || !meta["alphabet"].is_array()) {
    throw std::invalid_argument("report: metadata needs an alphabet array");
  }
  for (const json& v : meta["alphabet"]) report.alphabet.push_back(cx_at(v));
  report.arity = static_cast<int>(number_at(meta, "arity"));
  report.route = string_at(meta, "route");
  if (doc.contains("verdict")) {
    const json& verdict = doc["verdict"];
    Verdict v;
    v.target = string_at(verdict, "target");
    v.max_abs_diff = number_at(verdict, "max_abs_diff");
    if (!verdict.contains("pass") || !verdict["pass"].is_boolean()) {
      throw std::invalid_argument("report: verdict needs a boolean \"pass\"");
    }
    v.pass = verdict["pass"].get<bool>();
    report.verdict = v;
  }
  return report;
}

std::string to_text(const MatrixReport& report, bool color) {
  std::string out = report.name + "  dim " +
                    std::to_string(report.matrix.rows()) + "  route " +
                    report.route + "\n";
  if (!report.alphabet.empty()) {
    out += "alphabet: {";
    for (std::size_t i = 0; i < report.alphabet.size(); ++i) {
      if (i) out += ", ";
      out += format_complex(report.alphabet[i]);
    }
    out += "}  arity: " + std::to_string(report.arity) + "\n";
  }
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < report.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < report.matrix.cols(); ++j) {
      cells.push_back(format_complex(report.matrix(i, j)));
      width = std::max(width, cells.back().size());
    }
  }
  std::size_t k = 0;
  for (Eigen::Index i = 0; i < report.matrix.rows(); ++i) {
    out += "[";
    for (Eigen::Index j = 0; j < report.matrix.cols(); ++j, ++k) {
      out += " " + std::string(width - cells[k].size(), ' ') + cells[k];
    }
    out += " ]\n";
  }
  if (report.verdict) {
    out += "verdict: " + pass_label(report.verdict->pass, color) + "  target " +
           report.verdict->target + "  max|diff| " +
           short_double(report.verdict->max_abs_diff) + "\n";
  }
  return out;
}

std::string to_json(const WalshReport& report) {
  std::string out = "{\n";
  out += "  \"name\": " + json_escape(report.name) + ",\n";
  out += "  \"arity\": " + std::to_string(report.arity) + ",\n";
  out += "  \"coefficients\": [\n";
  for (std::size_t p = 0; p < report.coeffs.size(); ++p) {
    out += "    {\"p\": \"" + bit_label(p, report.arity) + "\", \"word\": \"" +
           z_word(p, report.arity) + "\", \"value\": " +
           fmt_double(report.coeffs[p]) + "}";
    out += p + 1 < report.coeffs.size() ? ",\n" : "\n";
  }
  out += "  ],\n";
  out += "  \"residual\": " + fmt_double(report.residual) + "\n";
  out += "}\n";
  return out;
}

WalshReport walsh_report_from_json(const std::string& text) {
  const json doc = parse(text);
  WalshReport report;
  report.name = string_at(doc, "name");
  report.arity = static_cast<int>(number_at(doc, "arity"));
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw std::invalid_argument("report: missing \"coefficients\"");
  }
  for (const json& row : doc["coefficients"]) {
    report.coeffs.push_back(number_at(row, "value"));
  }
  report.residual = number_at(doc, "residual");
  return report;
}

std::string to_text(const WalshReport& report, bool) {
  std::string out = report.name + "  arity " + std::to_string(report.arity) +
                    "\n  p" + std::string(std::max(1, report.arity - 1), ' ') +
                    "  word" + std::string(std::max(1, report.arity - 3), ' ') +
                    "  coefficient\n";
  for (std::size_t p = 0; p < report.coeffs.size(); ++p) {
    out += "  " + bit_label(p, report.arity) + "  " + z_word(p, report.arity) +
           "  " + fmt_double(report.coeffs[p]) + "\n";
  }
  out += "residual: " + short_double(report.residual) + "\n";
  return out;
}

std::string to_json(const VerifyReport& report) {
  std::string out = "{\n";
  out += "  \"left\": " + json_escape(report.left) + ",\n";
  out += "  \"right\": " + json_escape(report.right) + ",\n";
  out += "  \"dim\": " + std::to_string(report.dim) + ",\n";
  out += "  \"max_abs_diff\": " + fmt_double(report.max_abs_diff) + ",\n";
  out += "  \"tol\": " + fmt_double(report.tol) + ",\n";
  out += std::string("  \"pass\": ") + (report.pass ? "true" : "false") + "\n";
  out += "}\n";
  return out;
}

VerifyReport verify_report_from_json(const std::string& text) {
  const json doc = parse(text);
  VerifyReport report;
  report.left = string_at(doc, "left");
  report.right = string_at(doc, "right");
  report.dim = static_cast<int>(number_at(doc, "dim"));
  report.max_abs_diff = number_at(doc, "max_abs_diff");
  report.tol = number_at(doc, "tol");
  if (!doc.contains("pass") || !doc["pass"].is_boolean()) {
    throw std::invalid_argument("report: missing boolean \"pass\"");
  }
  report.pass = doc["pass"].get<bool>();
  return report;
}

std::string to_text(const VerifyReport& report, bool color) {
  return report.left + " vs " + report.right + "  dim " +
         std::to_string(report.dim) + "\nmax|diff| " +
         short_double(report.max_abs_diff) + "  tol " +
         short_double(report.tol) + "  " + pass_label(report.pass, color) +
         "\n";
}

}  // namespace eigensynth
