// Copyright 2026 The sqbound Authors
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

// JSON file formats for states and channels, and the number formatting shared
// by the CSV and JSON writers.
//
//   state:   {"labels": [...], "dims": [...], "matrix": [[[re, im], ...], ...]}
//   channel: {"input_dim": n, "output_labels": [...], "output_dims": [...],
//             "kraus": [matrix, ...]}
//
// Matrices are row-major. A bare number is accepted for a real entry.

#include <string>
#include <vector>

#include <json.hpp>

#include "sqb/bosonic.hpp"
#include "sqb/rates.hpp"
#include "sqb/squash.hpp"
#include "sqb/state.hpp"

namespace sqb::io {

using Json = nlohmann::ordered_json;

CMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const CMatrix& m);

/// Throws ParseError on schema problems; state invariants are then checked
/// by MultipartiteState::from_matrix (InvalidState etc.).
MultipartiteState state_from_json(const Json& j);
Json state_to_json(const MultipartiteState& state);
QuantumChannel channel_from_json(const Json& j);
Json channel_to_json(const QuantumChannel& channel);

/// Reads and parses a file; malformed JSON and I/O failures are ParseError.
Json read_json_file(const std::string& path);
MultipartiteState load_state(const std::string& path);
QuantumChannel load_channel(const std::string& path);

/// %.12g with '.' as decimal separator, "inf" / "-inf" for infinities.
/// NaN is never emitted: it throws DomainError.
std::string format_number(double x);
/// Finite values as JSON numbers (rounded to 12 significant digits so JSON
/// and CSV agree), infinities as the strings "inf" / "-inf".
Json json_number(double x);

std::string csv_line(const std::vector<std::string>& fields);

/// Common header of every JSON document written by the CLI.
Json metadata(const std::string& command, Json config);

Json to_json(const SquashResult& r);
Json to_json(const RateConstraint& rc);
Json to_json(const bosonic::BoundReport& r);

/// Column names and row cells of the bosonic sweep CSV.
std::vector<std::string> bosonic_csv_header(bool with_finite_ns);
std::vector<std::string> bosonic_csv_row(const bosonic::BoundReport& r);

}  // namespace sqb::io
