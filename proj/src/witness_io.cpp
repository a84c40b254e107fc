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

#include "strongeo/witness_io.hpp"

#include "strongeo/errors.hpp"

namespace strongeo {
namespace {

Vertex as_vertex(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw GraphError("witness ids must be non-negative integers");
  }
  return j.get<Vertex>();
}

std::vector<Vertex> as_vertices(const Json& j, const char* what) {
  if (!j.is_array()) throw GraphError(std::string("witness \"") + what + "\" must be an array");
  std::vector<Vertex> out;
  for (const auto& x : j) out.push_back(as_vertex(x));
  return out;
}

}  // namespace

Json witness_to_json(const CoverWitness& w) {
  Json j;
  j["set"] = w.set;
  Json geodesics = Json::array();
  for (const auto& pg : w.geodesics) {
    Json entry;
    entry["pair"] = {pg.u, pg.v};
    entry["path"] = pg.path.vertices;
    geodesics.push_back(std::move(entry));
  }
  j["geodesics"] = std::move(geodesics);
  return j;
}

CoverWitness witness_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("set")) throw GraphError("witness JSON needs a \"set\"");
  CoverWitness w;
  w.set = as_vertices(j["set"], "set");
  if (j.contains("geodesics")) {
    if (!j["geodesics"].is_array()) throw GraphError("witness \"geodesics\" must be an array");
    for (const auto& entry : j["geodesics"]) {
      if (!entry.is_object() || !entry.contains("pair") || !entry.contains("path")) {
        throw GraphError("each geodesic entry needs \"pair\" and \"path\"");
      }
      const auto pair = as_vertices(entry["pair"], "pair");
      if (pair.size() != 2) throw GraphError("a pair must hold exactly two ids");
      w.geodesics.push_back(PairGeodesic{pair[0], pair[1], GeodesicPath{as_vertices(entry["path"], "path")}});
    }
  }
  return w;
}

std::string dump_witness(const CoverWitness& w) { return dump_json(witness_to_json(w)); }

}  // namespace strongeo
