// Copyright 2026 The mapsched Authors
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

// JSON file formats.
//
// Instance:
//   {"kind":"a2a"|"x2y", "q":<int>, "sizes":[...], "x_sizes":[...], "y_sizes":[...]}
//   Keys not belonging to the kind may be omitted; unknown keys are rejected.
//
// Schema:
//   A2A: {"reducers":[[0,1],[0,2],...]}
//   X2Y: {"reducers":[{"x":[0],"y":[1,2]},...]}   (y indices are into Y)

#ifndef MAPSCHED_JSON_IO_HPP_
#define MAPSCHED_JSON_IO_HPP_

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mapsched/core.hpp"
#include "mapsched/schema.hpp"

namespace mapsched {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& doc);

nlohmann::json schema_to_json(const MappingSchema& schema, const Instance& instance);
// The instance supplies the expected kind and the X/Y split. Tags that do not
// match the instance kind, or out-of-range indices, raise SchemaError.
MappingSchema schema_from_json(const nlohmann::json& doc, const Instance& instance);

nlohmann::json pair_to_json(const PairId& pair);

// Stable text rendering used for every file and stdout document.
std::string dump(const nlohmann::json& doc);

std::string read_file(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);
MappingSchema load_schema(const std::filesystem::path& path, const Instance& instance);

// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace mapsched

#endif  // MAPSCHED_JSON_IO_HPP_
