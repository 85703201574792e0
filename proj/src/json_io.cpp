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

#include "mapsched/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace mapsched {

using nlohmann::json;

namespace {

std::vector<Size> size_list(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  const json& list = doc.at(key);
  if (!list.is_array()) throw FormatError(std::string("'") + key + "' must be an array");
  std::vector<Size> out;
  out.reserve(list.size());
  for (const json& v : list) {
    if (!v.is_number_integer()) {
      throw FormatError(std::string("'") + key + "' must hold integers");
    }
    out.push_back(v.get<Size>());
  }
  return out;
}

std::vector<std::size_t> index_list(const json& list, const char* what) {
  if (!list.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  out.reserve(list.size());
  for (const json& v : list) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw FormatError(std::string(what) + " must hold nonnegative integers");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

void reject_unknown_keys(const json& doc, std::initializer_list<std::string_view> allowed,
                         const char* what) {
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) throw FormatError(std::string("unknown field '") + key + "' in " + what);
  }
}

}  // namespace

json instance_to_json(const Instance& instance) {
  json doc;
  doc["kind"] = std::string(to_string(instance.kind()));
  doc["q"] = instance.capacity();
  auto as_array = [](std::span<const Size> s) { return json(std::vector<Size>(s.begin(), s.end())); };
  if (instance.kind() == ProblemKind::A2A) {
    doc["sizes"] = as_array(instance.sizes());
  } else {
    doc["x_sizes"] = as_array(instance.x_sizes());
    doc["y_sizes"] = as_array(instance.y_sizes());
  }
  return doc;
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("instance document must be a JSON object");
  reject_unknown_keys(doc, {"kind", "q", "sizes", "x_sizes", "y_sizes"}, "instance");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) {
    throw FormatError("instance requires a string 'kind'");
  }
  if (!doc.contains("q") || !doc.at("q").is_number_integer()) {
    throw FormatError("instance requires an integer 'q'");
  }
  return Instance::make(parse_problem_kind(doc.at("kind").get<std::string>()),
                        size_list(doc, "sizes"), size_list(doc, "x_sizes"),
                        size_list(doc, "y_sizes"), doc.at("q").get<Size>());
}

json schema_to_json(const MappingSchema& schema, const Instance& instance) {
  check_compatible(schema, instance);
  json reducers = json::array();
  const std::size_t m = instance.x_count();
  for (const Reducer& r : schema.reducers()) {
    if (schema.kind() == ProblemKind::A2A) {
      reducers.push_back(r);
      continue;
    }
    std::vector<std::size_t> xs;
    std::vector<std::size_t> ys;
    for (InputIndex i : r) {
      if (i < m) {
        xs.push_back(i);
      } else {
        ys.push_back(i - m);
      }
    }
    reducers.push_back(json{{"x", xs}, {"y", ys}});
  }
  return json{{"reducers", reducers}};
}

MappingSchema schema_from_json(const json& doc, const Instance& instance) {
  if (!doc.is_object()) throw FormatError("schema document must be a JSON object");
  reject_unknown_keys(doc, {"reducers"}, "schema");
  if (!doc.contains("reducers") || !doc.at("reducers").is_array()) {
    throw FormatError("schema requires a 'reducers' array");
  }
  const std::size_t m = instance.x_count();
  const std::size_t n = instance.y_count();
  std::vector<Reducer> reducers;
  std::size_t r = 0;
  for (const json& entry : doc.at("reducers")) {
    if (instance.kind() == ProblemKind::A2A) {
      if (!entry.is_array()) {
        throw SchemaError("reducer " + std::to_string(r) +
                          " uses X/Y tags but the instance is a2a");
      }
      reducers.push_back(index_list(entry, "a2a reducer"));
    } else {
      if (!entry.is_object()) {
        throw SchemaError("reducer " + std::to_string(r) +
                          " is an untagged list but the instance is x2y");
      }
      reject_unknown_keys(entry, {"x", "y"}, "x2y reducer");
      Reducer members;
      if (entry.contains("x")) {
        for (std::size_t i : index_list(entry.at("x"), "'x'")) {
          if (i >= m) {
            throw SchemaError("reducer " + std::to_string(r) + " references x" +
                              std::to_string(i) + " but X has " + std::to_string(m) +
                              " inputs");
          }
          members.push_back(i);
        }
      }
      if (entry.contains("y")) {
        for (std::size_t j : index_list(entry.at("y"), "'y'")) {
          if (j >= n) {
            throw SchemaError("reducer " + std::to_string(r) + " references y" +
                              std::to_string(j) + " but Y has " + std::to_string(n) +
                              " inputs");
          }
          members.push_back(m + j);
        }
      }
      reducers.push_back(std::move(members));
    }
    ++r;
  }
  return MappingSchema(instance.kind(), std::move(reducers));
}

json pair_to_json(const PairId& pair) { return json::array({pair.first, pair.second}); }

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json read_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw FormatError("malformed JSON in '" + path.string() + "': " + e.what());
  }
}

Instance load_instance(const std::filesystem::path& path) {
  return instance_from_json(read_json_file(path));
}

MappingSchema load_schema(const std::filesystem::path& path, const Instance& instance) {
  return schema_from_json(read_json_file(path), instance);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.flush();
    if (!out) throw FormatError("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw FormatError("cannot move output into '" + path.string() + "'");
  }
}

}  // namespace mapsched
