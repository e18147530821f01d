/*
 * Copyright 2026 The c2pencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace c2pencil::cli {

Error parse_error(const std::string& where, const std::string& what) {
  return Error(ErrorKind::InvalidInput, "parse error at " + where + ": " + what);
}

const FieldSpec& PencilInput::field() const {
  return pencil ? pencil->field() : normal_form->field();
}

Json load_json(const std::string& source) {
  std::string text;
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (!source.empty() && source.front() == '{') {
    text = source;
  } else {
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::InvalidInput, "cannot open input file '" + source + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error("byte " + std::to_string(e.byte), e.what());
  }
}

const FieldSpec& parse_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where, "field must be a string like \"F2^4/0x13\"");
  try {
    return FieldSpec::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw parse_error(where, e.what());
  }
}

FieldElement parse_element(const FieldSpec& f, const Json& j, const std::string& where) {
  if (!j.is_string()) throw parse_error(where, "element must be a hex string like \"0x3\"");
  try {
    return c2pencil::parse_element(f, j.get<std::string>());
  } catch (const Error& e) {
    throw parse_error(where, e.what());
  }
}

Matrix parse_matrix(const FieldSpec& f, const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw parse_error(where, "matrix must be a non-empty array of rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != j[0].size()) throw parse_error(at, "rows must be arrays of equal length");
    Vector row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(parse_element(f, j[r][c], at + "[" + std::to_string(c) + "]"));
    rows.push_back(std::move(row));
  }
  return Matrix(f, rows);
}

Matrix parse_matrix_text(const FieldSpec& f, const std::string& text) {
  Json j = Json::array();
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    Json r = Json::array();
    std::stringstream cells(row);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t"), e = cell.find_last_not_of(" \t");
      r.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    j.push_back(std::move(r));
  }
  return parse_matrix(f, j, "--matrix");
}

namespace {

QuadraticForm parse_form(const FieldSpec& f, std::size_t n, const Json& j, const std::string& where) {
  if (!j.is_array()) throw parse_error(where, "form must be an array of terms");
  QuadraticForm q(f, n);
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string at = where + "[" + std::to_string(k) + "]";
    const Json& t = j[k];
    if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("c"))
      throw parse_error(at, "term needs i, j and c");
    if (!t["i"].is_number_unsigned() || !t["j"].is_number_unsigned())
      throw parse_error(at, "i and j must be non-negative integers");
    const auto i = t["i"].get<std::size_t>(), jj = t["j"].get<std::size_t>();
    if (i > jj) throw parse_error(at, "terms must have i <= j");
    if (jj >= n) throw parse_error(at, "variable index out of range for M");
    q.add(i, jj, parse_element(f, t["c"], at + ".c"));
  }
  return q;
}

}  // namespace

PencilInput parse_pencil(const Json& doc, const FieldSpec* field_override) {
  if (!doc.is_object()) throw parse_error("$", "pencil must be a JSON object");
  const FieldSpec* f = field_override;
  if (!f) {
    if (!doc.contains("field")) throw parse_error("$", "missing \"field\" (or pass --field)");
    f = &parse_field(doc["field"], "$.field");
  }
  PencilInput in;
  if (doc.contains("pairs")) {
    const Json& pj = doc["pairs"];
    if (!pj.is_array()) throw parse_error("$.pairs", "pairs must be an array");
    std::vector<PencilNormalForm::Pair> pairs;
    for (std::size_t k = 0; k < pj.size(); ++k) {
      const std::string at = "$.pairs[" + std::to_string(k) + "]";
      if (!pj[k].is_array() || pj[k].size() != 2) throw parse_error(at, "pair must be [a, b]");
      pairs.emplace_back(parse_element(*f, pj[k][0], at + "[0]"), parse_element(*f, pj[k][1], at + "[1]"));
    }
    try {
      in.normal_form = PencilNormalForm::from_pairs(*f, std::move(pairs));
    } catch (const Error& e) {
      throw parse_error("$.pairs", e.what());
    }
    return in;
  }
  if (!doc.contains("M") || !doc["M"].is_number_unsigned()) throw parse_error("$.M", "M must be a non-negative integer");
  const std::size_t n = 2 * doc["M"].get<std::size_t>() + 2;
  if (!doc.contains("f") || !doc.contains("g")) throw parse_error("$", "missing \"f\" or \"g\"");
  QuadraticForm fq = parse_form(*f, n, doc["f"], "$.f");
  QuadraticForm gq = parse_form(*f, n, doc["g"], "$.g");
  try {
    in.pencil = Pencil(std::move(fq), std::move(gq));
  } catch (const Error& e) {
    throw parse_error("$", e.what());
  }
  return in;
}

Json to_json(const FieldElement& x) { return x.hex(); }

Json to_json(const P1Point& p) { return Json::array({p.s.hex(), p.t.hex()}); }

Json to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) j.push_back(to_json(m.row(r)));
  return j;
}

Json to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.hex());
  return j;
}

Json to_json(const QuadraticForm& q) {
  Json j = Json::array();
  for (const auto& t : q.terms()) j.push_back(Json{{"i", t.i}, {"j", t.j}, {"c", t.c.hex()}});
  return j;
}

Json to_json(const BinaryForm& b) { return to_json(Vector(b.coeffs())); }

Json to_json(const Pencil& p) {
  return Json{{"field", p.field().str()}, {"M", p.M()}, {"f", to_json(p.f())}, {"g", to_json(p.g())}};
}

Json pairs_json(const PencilNormalForm& nf) {
  Json j = Json::array();
  for (const auto& [a, b] : nf.pairs()) j.push_back(Json::array({a.hex(), b.hex()}));
  return j;
}

}  // namespace c2pencil::cli
