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

/**
 * @file io.hpp
 * @brief JSON encodings shared by the command-line tool.
 *
 * Pencil input, either general or already in normal form:
 *
 *     {"field": "F2^m/0x..", "M": 2,
 *      "f": [{"i": 0, "j": 3, "c": "0x1"}, ...], "g": [...]}
 *     {"field": "F2^m/0x..", "pairs": [["0x1", "0x0"], ...]}
 *
 * Elements are hex literals; matrices are row-major arrays of rows.
 */

#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "c2pencil/autgroup.hpp"

namespace c2pencil::cli {

using Json = nlohmann::ordered_json;

/// InvalidInput with the JSON location of the offending value.
Error parse_error(const std::string& where, const std::string& what);

struct PencilInput {
  std::optional<Pencil> pencil;
  /// Set when the input gave the pairs directly; pair order is kept.
  std::optional<PencilNormalForm> normal_form;

  const FieldSpec& field() const;
  Pencil as_pencil() const { return pencil ? *pencil : normal_form->pencil(); }
};

/// Reads a path, inline JSON (starting with '{'), or "-" for stdin.
Json load_json(const std::string& source);

const FieldSpec& parse_field(const Json& j, const std::string& where);
FieldElement parse_element(const FieldSpec& f, const Json& j, const std::string& where);
Matrix parse_matrix(const FieldSpec& f, const Json& j, const std::string& where);
/// "0x1,0x0;0x0,0x2" (rows separated by ';').
Matrix parse_matrix_text(const FieldSpec& f, const std::string& text);

/// `field_override`, when set, replaces the document's field.
PencilInput parse_pencil(const Json& doc, const FieldSpec* field_override);

Json to_json(const FieldElement& x);
Json to_json(const P1Point& p);
Json to_json(const Matrix& m);
Json to_json(const Vector& v);
Json to_json(const QuadraticForm& q);
Json to_json(const BinaryForm& b);
Json to_json(const Pencil& p);
Json pairs_json(const PencilNormalForm& nf);

}  // namespace c2pencil::cli
