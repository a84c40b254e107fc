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

#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "strongeo/apollonian.hpp"
#include "strongeo/errors.hpp"
#include "strongeo/graph.hpp"
#include "strongeo/random_graph.hpp"

using namespace strongeo;

TEST_CASE("build: K4 from all six pairs") {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const Graph g = Graph::build(4, edges);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 6);
  CHECK(g == complete_graph(4));
  CHECK(g.edges() == apollonian(0).graph().edges());
}

TEST_CASE("build: single vertex") {
  const Graph g = Graph::build(1, {});
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 0);
  CHECK(is_connected(g));
}

TEST_CASE("build: duplicate listings collapse") {
  const std::vector<Edge> edges{{0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 2}};
  const Graph g = Graph::build(4, edges);
  CHECK(g.num_edges() == 3);
  CHECK(g == path_graph(4));
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("build: rejects bad edges and names them") {
  const std::vector<Edge> loop{{0, 1}, {2, 2}};
  const std::vector<Edge> range{{0, 7}};
  CHECK_THROWS_AS(Graph::build(3, loop), GraphError);
  CHECK_THROWS_AS(Graph::build(3, range), GraphError);
  try {
    Graph::build(3, range);
  } catch (const GraphError& e) {
    CHECK(std::string(e.what()).find("7") != std::string::npos);
  }
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distances(complete_graph(4), 0).dist == std::vector<int>{0, 1, 1, 1});
  CHECK(bfs_distances(path_graph(4), 0).dist == std::vector<int>{0, 1, 2, 3});

  const auto a1 = apollonian(1);
  const auto top = a1.top_level();
  REQUIRE(top.size() == 3);
  const auto d = oracle::distances(a1.graph());
  for (Vertex u : top)
    for (Vertex v : top)
      if (u != v) {
        CHECK(bfs_distances(a1.graph(), u).dist[v] == 2);
        CHECK(d[u][v] == 2);
      }

  const std::vector<Edge> two{{0, 1}};
  const Graph split = Graph::build(3, two);
  const auto row = bfs_distances(split, 0);
  CHECK_FALSE(row.reachable(2));
  CHECK(row.dist[2] == kUnreachable);
  CHECK_FALSE(is_connected(split));
  CHECK_THROWS_AS(require_connected(split), DisconnectedError);
}

TEST_CASE("bfs agrees with Floyd-Warshall and is 1-Lipschitz on edges") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_gnp(3 + seed % 8, 0.35, seed);
    const auto ref = oracle::distances(g);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      const auto row = bfs_distances(g, s);
      CHECK(row.dist[s] == 0);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int expect = ref[s][v] >= oracle::kInf ? kUnreachable : ref[s][v];
        CHECK(row.dist[v] == expect);
      }
      for (auto [u, v] : g.edges())
        if (row.reachable(u)) CHECK(std::abs(row.dist[u] - row.dist[v]) <= 1);
    }
  }
}

TEST_CASE("simplicial vertices") {
  const auto a3 = apollonian(3);
  const auto simp = simplicial_vertices(a3.graph());
  CHECK(simp.size() == 27);
  CHECK(simp == a3.top_level());
  CHECK(simplicial_vertices(complete_graph(5)) == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(simplicial_vertices(cycle_graph(5)).empty());
}

TEST_CASE("pendant vertices are simplicial") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = random_connected_gnp(4 + seed % 6, 0.3, seed);
    const auto simp = simplicial_vertices(g);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      if (g.degree(v) == 1) CHECK(std::binary_search(simp.begin(), simp.end(), v));
  }
}

TEST_CASE("simplicial matches a direct clique check") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_gnp(6, 0.5, seed);
    std::vector<Vertex> expect;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      bool clique = true;
      for (Vertex a : g.neighbors(v))
        for (Vertex b : g.neighbors(v))
          if (a < b && !g.has_edge(a, b)) clique = false;
      if (clique) expect.push_back(v);
    }
    CHECK(simplicial_vertices(g) == expect);
  }
}

TEST_CASE("rebuilding from the edge dump is the identity") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = random_gnp(1 + seed % 10, 0.4, seed);
    const auto edges = g.edges();
    CHECK(Graph::build(g.num_vertices(), edges) == g);
  }
}

TEST_CASE("diameter and induced subgraph") {
  CHECK(diameter(path_graph(5)) == 4);
  CHECK(diameter(cycle_graph(6)) == 3);
  CHECK(diameter(complete_graph(3)) == 1);
  const std::vector<Vertex> keep{0, 1, 2};
  CHECK(induced_subgraph(cycle_graph(4), keep) == path_graph(3));
}

TEST_CASE("random_gnp is seed-deterministic") {
  CHECK(random_gnp(9, 0.5, 7) == random_gnp(9, 0.5, 7));
  CHECK(random_gnp(9, 0.0, 7).num_edges() == 0);
  CHECK(random_gnp(9, 1.0, 7) == complete_graph(9));
  CHECK(is_connected(random_connected_gnp(8, 0.2, 3)));
}
