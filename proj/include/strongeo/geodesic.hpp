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

#ifndef STRONGEO_GEODESIC_HPP
#define STRONGEO_GEODESIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "strongeo/graph.hpp"

namespace strongeo {

/// A shortest path, stored as its vertex sequence (first = one endpoint).
struct GeodesicPath {
  std::vector<Vertex> vertices;

  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }

  auto operator<=>(const GeodesicPath&) const = default;
};

inline constexpr std::uint64_t kDefaultGeodesicCap = 1'000'000;

/// Result of a capped enumeration. `capped` is set exactly when more than
/// `paths.size()` geodesics exist.
struct GeodesicList {
  std::vector<GeodesicPath> paths;
  bool capped = false;
};

/// Every u,v-geodesic in lexicographic order of vertex sequence, at most
/// `cap` of them. Throws DisconnectedError when v is unreachable from u and
/// GraphError when u == v or cap == 0.
GeodesicList all_geodesics(const Graph& g, Vertex u, Vertex v,
                           std::uint64_t cap = kDefaultGeodesicCap);

/// Same, reusing precomputed rows dist_u (from u) and dist_v (from v).
GeodesicList all_geodesics(const Graph& g, const DistanceRow& dist_u,
                           const DistanceRow& dist_v, std::uint64_t cap);

/// Number of u,v-geodesics via path counting on the shortest-path DAG.
/// Saturates at UINT64_MAX.
std::uint64_t count_geodesics(const Graph& g, Vertex u, Vertex v);

/// Empty string when `path` is a geodesic of g, otherwise a description of
/// the first defect found.
std::string geodesic_defect(const Graph& g, const GeodesicPath& path);

inline bool is_geodesic(const Graph& g, const GeodesicPath& path) {
  return geodesic_defect(g, path).empty();
}

}  // namespace strongeo

#endif  // STRONGEO_GEODESIC_HPP
