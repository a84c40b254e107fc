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

#include "strongeo/geodesic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "strongeo/errors.hpp"

namespace strongeo {
namespace {

void check_pair(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(u) || !g.contains(v)) {
    std::ostringstream msg;
    msg << "vertex pair (" << u << "," << v << ") is out of range";
    throw GraphError(msg.str());
  }
  if (u == v) throw GraphError("geodesic endpoints must differ, got " + std::to_string(u) + " twice");
}

// Vertices on some u,v-geodesic sit at dist_u[w] + dist_v[w] == d.
bool on_dag(const DistanceRow& dist_u, const DistanceRow& dist_v, Vertex w, int d) {
  return dist_u.dist[w] != kUnreachable && dist_v.dist[w] != kUnreachable &&
         dist_u.dist[w] + dist_v.dist[w] == d;
}

}  // namespace

GeodesicList all_geodesics(const Graph& g, Vertex u, Vertex v, std::uint64_t cap) {
  check_pair(g, u, v);
  return all_geodesics(g, bfs_distances(g, u), bfs_distances(g, v), cap);
}

GeodesicList all_geodesics(const Graph& g, const DistanceRow& dist_u,
                           const DistanceRow& dist_v, std::uint64_t cap) {
  const Vertex u = dist_u.source;
  const Vertex v = dist_v.source;
  check_pair(g, u, v);
  if (cap == 0) throw GraphError("geodesic cap must be positive");
  const int d = dist_u.dist[v];
  if (d == kUnreachable) {
    throw DisconnectedError("no path between " + std::to_string(u) + " and " + std::to_string(v));
  }

  GeodesicList out;
  std::vector<Vertex> current{u};
  current.reserve(static_cast<std::size_t>(d) + 1);

  // Depth-first expansion with ascending neighbor order yields the paths in
  // lexicographic order. Returns false once the cap is exceeded.
  auto expand = [&](auto&& self, Vertex w) -> bool {
    if (w == v) {
      if (out.paths.size() == cap) {
        out.capped = true;
        return false;
      }
      out.paths.push_back(GeodesicPath{current});
      return true;
    }
    const int next_level = dist_u.dist[w] + 1;
    for (Vertex x : g.neighbors(w)) {
      if (dist_u.dist[x] != next_level || !on_dag(dist_u, dist_v, x, d)) continue;
      current.push_back(x);
      const bool keep_going = self(self, x);
      current.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  expand(expand, u);
  return out;
}

std::uint64_t count_geodesics(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  const auto dist_u = bfs_distances(g, u);
  const auto dist_v = bfs_distances(g, v);
  const int d = dist_u.dist[v];
  if (d == kUnreachable) {
    throw DisconnectedError("no path between " + std::to_string(u) + " and " + std::to_string(v));
  }

  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<Vertex> order;
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    if (on_dag(dist_u, dist_v, w, d)) order.push_back(w);
  }
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return dist_u.dist[a] < dist_u.dist[b]; });

  std::vector<std::uint64_t> ways(g.num_vertices(), 0);
  ways[u] = 1;
  for (Vertex w : order) {
    if (w == u) continue;
    std::uint64_t total = 0;
    for (Vertex x : g.neighbors(w)) {
      if (dist_u.dist[x] == dist_u.dist[w] - 1 && on_dag(dist_u, dist_v, x, d)) {
        total = (kMax - total < ways[x]) ? kMax : total + ways[x];
      }
    }
    ways[w] = total;
  }
  return ways[v];
}

std::string geodesic_defect(const Graph& g, const GeodesicPath& path) {
  const auto& vs = path.vertices;
  if (vs.size() < 2) return "path has fewer than two vertices";
  for (Vertex w : vs) {
    if (!g.contains(w)) return "vertex " + std::to_string(w) + " is out of range";
  }
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end()) {
    return "vertex " + std::to_string(*it) + " repeats";
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (!g.has_edge(vs[i], vs[i + 1])) {
      return "step " + std::to_string(vs[i]) + "-" + std::to_string(vs[i + 1]) + " is not an edge";
    }
  }
  const int d = bfs_distances(g, vs.front()).dist[vs.back()];
  if (static_cast<int>(path.length()) != d) {
    return "path length " + std::to_string(path.length()) + " exceeds distance " +
           std::to_string(d);
  }
  return {};
}

}  // namespace strongeo
