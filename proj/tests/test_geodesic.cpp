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
#include "strongeo/errors.hpp"
#include "strongeo/geodesic.hpp"
#include "strongeo/random_graph.hpp"
#include "strongeo/reduction.hpp"

using namespace strongeo;

namespace {

std::vector<std::vector<Vertex>> sequences(const GeodesicList& list) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : list.paths) out.push_back(p.vertices);
  return out;
}

}  // namespace

TEST_CASE("C4 opposite vertices: two geodesics") {
  const Graph c4 = cycle_graph(4);
  const auto list = all_geodesics(c4, 0, 2);
  CHECK_FALSE(list.capped);
  CHECK(sequences(list) == std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 3, 2}});
  CHECK(count_geodesics(c4, 0, 2) == 2);
}

TEST_CASE("K4 pairs: the edge only") {
  const Graph k4 = complete_graph(4);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v)
      if (u != v) {
        const auto list = all_geodesics(k4, u, v);
        REQUIRE(list.paths.size() == 1);
        CHECK(list.paths[0].vertices == std::vector<Vertex>{u, v});
      }
}

TEST_CASE("counts on C6 and P4") {
  CHECK(count_geodesics(cycle_graph(6), 0, 3) == 2);
  CHECK(oracle::geodesics(cycle_graph(6), 0, 3).size() == 2);
  CHECK(count_geodesics(path_graph(4), 0, 3) == 1);
}

TEST_CASE("gadget of K2: x to y'' has exactly two geodesics") {
  const auto gadget = build_gadget(path_graph(2));
  const Vertex x = gadget.top(0);
  const Vertex y = gadget.top(1);
  const auto list = all_geodesics(gadget.graph(), x, gadget.bottom(1));
  CHECK(sequences(list) ==
        std::vector<std::vector<Vertex>>{
            {x, y, gadget.middle(1), gadget.bottom(1)},
            {x, gadget.middle(0), gadget.middle(1), gadget.bottom(1)}});
  CHECK(count_geodesics(gadget.graph(), x, gadget.bottom(1)) == 2);
}

TEST_CASE("cap marks truncation explicitly") {
  // C4 with cap 1: one of two paths.
  const auto capped = all_geodesics(cycle_graph(4), 0, 2, 1);
  CHECK(capped.capped);
  CHECK(capped.paths.size() == 1);
  CHECK(capped.paths[0].vertices == std::vector<Vertex>{0, 1, 2});
  const auto exact = all_geodesics(cycle_graph(4), 0, 2, 2);
  CHECK_FALSE(exact.capped);
  CHECK(exact.paths.size() == 2);
}

TEST_CASE("errors") {
  const std::vector<Edge> one{{0, 1}};
  const Graph split = Graph::build(3, one);
  CHECK_THROWS_AS(all_geodesics(split, 0, 2), DisconnectedError);
  CHECK_THROWS_AS(count_geodesics(split, 0, 2), DisconnectedError);
  CHECK_THROWS_AS(all_geodesics(path_graph(3), 1, 1), GraphError);
  CHECK_THROWS_AS(all_geodesics(path_graph(3), 0, 2, 0), GraphError);
}

TEST_CASE("geodesic recognition") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_geodesic(c4, GeodesicPath{{0, 1, 2}}));
  CHECK_FALSE(is_geodesic(c4, GeodesicPath{{0, 1, 2, 3}}));  // longer than d(0,3)
  CHECK_FALSE(is_geodesic(c4, GeodesicPath{{0, 2}}));        // not an edge
  CHECK_FALSE(is_geodesic(c4, GeodesicPath{{0, 1, 0}}));     // repeats
  CHECK_FALSE(is_geodesic(c4, GeodesicPath{{0, 9}}));        // out of range
  CHECK_FALSE(is_geodesic(c4, GeodesicPath{}));
}

TEST_CASE("exhaustive: every labelled graph up to 6 vertices, every pair") {
  // Enumeration and counting against all simple paths of minimum length.
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      const auto d = oracle::distances(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (u == v || d[u][v] >= oracle::kInf) continue;
          const auto list = all_geodesics(g, u, v);
          const auto ref = oracle::geodesics(g, u, v);
          REQUIRE(sequences(list) == ref);
          REQUIRE(count_geodesics(g, u, v) == ref.size());
          for (const auto& p : list.paths) REQUIRE(static_cast<int>(p.length()) == d[u][v]);
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("sampled: graphs on 7 and 8 vertices, every pair") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 7 + seed % 2;
    const Graph g = random_gnp(n, 0.2 + 0.1 * static_cast<double>(seed % 5), seed);
    const auto d = oracle::distances(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (d[u][v] >= oracle::kInf) continue;
        const auto list = all_geodesics(g, u, v);
        const auto ref = oracle::geodesics(g, u, v);
        REQUIRE(sequences(list) == ref);
        REQUIRE(count_geodesics(g, u, v) == ref.size());
      }
  }
}
