// Copyright 2026 The strongeo Authors
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

// Graph interchange: canonical JSON and Graphviz DOT.
//
// JSON layout: {"n": int, "edges": [[u,v],...], "labels": {"id": "text"}}.
// Edges are written with u < v in lexicographic order and labels in
// ascending id order, so equal graphs serialize to equal bytes. Readers
// ignore unknown top-level keys, which lets annotated dumps (levels,
// layers, faces) load as plain graphs.

#ifndef STRONGEO_GRAPH_IO_HPP
#define STRONGEO_GRAPH_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"
#include "strongeo/graph.hpp"

namespace strongeo {

using Json = nlohmann::ordered_json;

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Compact single-line JSON followed by a newline.
std::string dump_json(const Json& j);

std::string dump_graph(const Graph& g);
Graph parse_graph(const std::string& text);

struct DotOptions {
  std::string name = "G";
  // Use labels as node identifiers instead of integer ids.
  bool labels_as_names = false;
};

std::string graph_to_dot(const Graph& g, const DotOptions& options = {});

std::string read_text_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);

}  // namespace strongeo

#endif  // STRONGEO_GRAPH_IO_HPP
