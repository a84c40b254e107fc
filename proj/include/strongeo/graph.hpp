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

#ifndef STRONGEO_GRAPH_HPP
#define STRONGEO_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace strongeo {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph on vertices 0..n-1.
///
/// Neighbor lists are sorted and duplicate-free. Labels are optional
/// metadata and never consulted by the algorithms.
class Graph {
 public:
  Graph() = default;

  /// Builds the canonical graph from an edge list. Duplicate listings
  /// (in either orientation) collapse to one edge. Throws GraphError
  /// naming the offending edge on out-of-range ids or self-loops.
  static Graph build(std::size_t n, std::span<const Edge> edges,
                     std::map<Vertex, std::string> labels = {});

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v < adjacency_.size(); }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  const std::map<Vertex, std::string>& labels() const { return labels_; }
  std::optional<std::string> label(Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::map<Vertex, std::string> labels_;
  std::size_t num_edges_ = 0;
};

inline constexpr int kUnreachable = -1;

/// Hop distances from a single source; unreachable vertices hold
/// kUnreachable.
struct DistanceRow {
  Vertex source = 0;
  std::vector<int> dist;

  bool reachable(Vertex v) const { return dist[v] != kUnreachable; }
};

DistanceRow bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Throws DisconnectedError unless g is connected and non-empty.
void require_connected(const Graph& g);

/// One BFS row per vertex. Only meant for the small graphs the exact
/// solvers handle.
std::vector<DistanceRow> all_pairs_distances(const Graph& g);

/// Largest finite distance. Assumes a connected graph.
int diameter(const Graph& g);

/// Vertices whose open neighborhood induces a clique, ascending.
std::vector<Vertex> simplicial_vertices(const Graph& g);

/// Subgraph induced by `keep` (ascending), relabelled 0..|keep|-1 in order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

// Small named families used throughout tests and examples.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace strongeo

#endif  // STRONGEO_GRAPH_HPP
