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

#include "strongeo/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "strongeo/errors.hpp"

namespace strongeo {
namespace {

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

Vertex parse_id(const Json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) throw GraphError(std::string(what) + " must be an integer id");
  const auto value = j.get<long long>();
  if (value < 0 || static_cast<unsigned long long>(value) >= n) {
    throw GraphError(std::string(what) + " " + std::to_string(value) + " is out of range");
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, text] : g.labels()) labels[std::to_string(v)] = text;
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) throw GraphError("graph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw GraphError("graph JSON needs a non-negative integer \"n\"");
  }
  const auto n = j["n"].get<std::size_t>();
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphError("\"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw GraphError("each edge must be a pair of integer ids");
      }
      const auto u = e[0].get<long long>();
      const auto v = e[1].get<long long>();
      if (u < 0 || v < 0) {
        throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has a negative id");
      }
      edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  std::map<Vertex, std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw GraphError("\"labels\" must be an object");
    for (const auto& [key, value] : j["labels"].items()) {
      std::size_t used = 0;
      long long id = -1;
      try {
        id = std::stoll(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || id < 0) throw GraphError("label key \"" + key + "\" is not an id");
      if (!value.is_string()) throw GraphError("label for " + key + " must be a string");
      labels[static_cast<Vertex>(parse_id(Json(id), n, "label id"))] = value.get<std::string>();
    }
  }
  return Graph::build(n, edges, std::move(labels));
}

std::string dump_json(const Json& j) { return j.dump() + "\n"; }

std::string dump_graph(const Graph& g) { return dump_json(graph_to_json(g)); }

Graph parse_graph(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GraphError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string graph_to_dot(const Graph& g, const DotOptions& options) {
  auto node = [&](Vertex v) {
    if (options.labels_as_names) {
      if (auto text = g.label(v)) return dot_quote(*text);
    }
    return std::to_string(v);
  };
  std::ostringstream out;
  out << "graph " << dot_quote(options.name) << " {\n";
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << "  " << node(v);
    if (!options.labels_as_names) {
      if (auto text = g.label(v)) out << " [label=" << dot_quote(*text) << "]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << node(u) << " -- " << node(v) << ";\n";
  out << "}\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw GraphError(path.string() + ": malformed JSON: " + e.what());
  }
}

}  // namespace strongeo
