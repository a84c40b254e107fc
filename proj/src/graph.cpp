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

#include "strongeo/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "strongeo/errors.hpp"

namespace strongeo {

Graph Graph::build(std::size_t n, std::span<const Edge> edges,
                   std::map<Vertex, std::string> labels) {
  Graph g;
  g.adjacency_.resize(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") has an id outside 0.." << (n == 0 ? 0 : n - 1);
      throw GraphError(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") is a self-loop";
      throw GraphError(msg.str());
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.num_edges_ += nbrs.size();
  }
  g.num_edges_ /= 2;
  for (const auto& [v, text] : labels) {
    if (v >= n) {
      throw GraphError("label for vertex " + std::to_string(v) + " is out of range");
    }
  }
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<std::string> Graph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

DistanceRow bfs_distances(const Graph& g, Vertex source) {
  if (!g.contains(source)) {
    throw GraphError("source vertex " + std::to_string(source) + " is out of range");
  }
  DistanceRow row{source, std::vector<int>(g.num_vertices(), kUnreachable)};
  std::deque<Vertex> queue{source};
  row.dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (row.dist[w] == kUnreachable) {
        row.dist[w] = row.dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return row;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return false;
  const auto row = bfs_distances(g, 0);
  return std::none_of(row.dist.begin(), row.dist.end(),
                      [](int d) { return d == kUnreachable; });
}

void require_connected(const Graph& g) {
  if (g.num_vertices() == 0) throw DisconnectedError("graph has no vertices");
  const auto row = bfs_distances(g, 0);
  for (Vertex v = 0; v < row.dist.size(); ++v) {
    if (row.dist[v] == kUnreachable) {
      throw DisconnectedError("graph is disconnected: vertex " + std::to_string(v) +
                              " is unreachable from vertex 0");
    }
  }
}

std::vector<DistanceRow> all_pairs_distances(const Graph& g) {
  std::vector<DistanceRow> rows;
  rows.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) rows.push_back(bfs_distances(g, v));
  return rows;
}

int diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto row = bfs_distances(g, v);
    for (int d : row.dist) best = std::max(best, d);
  }
  return best;
}

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto nbrs = g.neighbors(v);
    bool clique = true;
    for (std::size_t i = 0; clique && i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.has_edge(nbrs[i], nbrs[j])) {
          clique = false;
          break;
        }
      }
    }
    if (clique) out.push_back(v);
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<int> index(g.num_vertices(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) {
      edges.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
    }
  }
  return Graph::build(keep.size(), edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph::build(n, edges);
}

}  // namespace strongeo
