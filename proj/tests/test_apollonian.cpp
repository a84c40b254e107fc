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

#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "strongeo/apollonian.hpp"
#include "strongeo/errors.hpp"
#include "strongeo/sierpinski.hpp"

using namespace strongeo;

namespace {

std::size_t pow3(unsigned n) {
  std::size_t p = 1;
  while (n-- > 0) p *= 3;
  return p;
}

LevelTag tag(const ApollonianNetwork& an, Vertex v) { return *an.level_of(v); }

bool common_neighbor(const Graph& g, Vertex x, Vertex y) {
  for (Vertex w : g.neighbors(x))
    if (g.has_edge(w, y)) return true;
  return false;
}

}  // namespace

TEST_CASE("sizes") {
  CHECK(apollonian(0).graph().edges() == complete_graph(4).edges());
  const auto a1 = apollonian(1);
  CHECK(a1.graph().num_vertices() == 7);
  CHECK(a1.graph().num_edges() == 15);
  CHECK(apollonian(3).graph().num_vertices() == 43);
  for (unsigned r = 0; r <= 6; ++r) {
    const auto an = apollonian(r);
    std::size_t expect = 3;
    for (unsigned k = 0; k <= r; ++k) expect += pow3(k);
    CHECK(an.graph().num_vertices() == expect);
    CHECK(an.graph().num_edges() == 3 * expect - 6);
    CHECK(an.top_level().size() == pow3(r));
  }
}

TEST_CASE("level tags and genealogy") {
  const auto an = apollonian(3);
  CHECK_FALSE(an.level_of(ApollonianNetwork::kA).has_value());
  CHECK(tag(an, 3) == LevelTag{0, 1});
  CHECK(an.vertex_at({1, 1}) == 4);
  CHECK(an.vertex_at({3, 27}) == 42);
  CHECK(first_of_level(3) == 16);
  for (Vertex v = 3; v < an.graph().num_vertices(); ++v) {
    CHECK(an.vertex_at(tag(an, v)) == v);
    const Face& f = an.inserted_into(v);
    // The new vertex sees exactly its face among older vertices.
    std::vector<Vertex> older;
    for (Vertex w : an.graph().neighbors(v))
      if (w < v) older.push_back(w);
    std::vector<Vertex> corners(f.begin(), f.end());
    std::sort(corners.begin(), corners.end());
    CHECK(older == corners);
    CHECK(an.graph().has_edge(f[0], f[1]));
    CHECK(an.graph().has_edge(f[1], f[2]));
    CHECK(an.graph().has_edge(f[0], f[2]));
  }
}

TEST_CASE("top level is simplicial and independent") {
  for (unsigned r = 1; r <= 5; ++r) {
    const auto an = apollonian(r);
    const auto top = an.top_level();
    CHECK(simplicial_vertices(an.graph()) == top);
    for (Vertex u : top)
      for (Vertex v : top)
        if (u < v) CHECK_FALSE(an.graph().has_edge(u, v));
  }
}

TEST_CASE("inner dual is S(3, r+1)") {
  for (unsigned r = 0; r <= 5; ++r) {
    const auto an = apollonian(r);
    const auto dual = inner_dual(an);
    const auto s = sierpinski(r + 1);
    const auto& g = an.graph();
    // Bounded faces: 2|V| - 5, each a triangle of A(r).
    REQUIRE(dual.faces.size() == 2 * g.num_vertices() - 5);
    REQUIRE(dual.dual.num_vertices() == pow3(r + 1));
    std::set<std::array<Vertex, 3>> distinct;
    for (auto f : dual.faces) {
      CHECK(g.has_edge(f[0], f[1]));
      CHECK(g.has_edge(f[1], f[2]));
      CHECK(g.has_edge(f[0], f[2]));
      std::sort(f.begin(), f.end());
      distinct.insert(f);
    }
    CHECK(distinct.size() == dual.faces.size());
    // The outer face is a-b-c, so it is not listed.
    CHECK(distinct.count({0, 1, 2}) == 0);

    // Adjacency: faces sharing two corners.
    std::size_t shared = 0;
    for (std::size_t i = 0; i < dual.faces.size(); ++i)
      for (std::size_t j = i + 1; j < dual.faces.size(); ++j) {
        int common = 0;
        for (Vertex x : dual.faces[i])
          for (Vertex y : dual.faces[j]) common += x == y;
        const bool adjacent = common == 2;
        CHECK(dual.dual.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) == adjacent);
        shared += adjacent;
      }
    CHECK(shared == dual.dual.num_edges());

    // The map is a bijection that carries edges onto edges, and both graphs
    // have the same number of edges.
    std::set<Vertex> image(dual.to_sierpinski.begin(), dual.to_sierpinski.end());
    CHECK(image.size() == s.num_vertices());
    CHECK(dual.dual.num_edges() == s.graph().num_edges());
    for (auto [x, y] : dual.dual.edges())
      CHECK(s.graph().has_edge(dual.to_sierpinski[x], dual.to_sierpinski[y]));
  }
}

TEST_CASE("dual map: sizes and adjacency") {
  CHECK_THROWS_AS(dual_map(apollonian(0)), GraphError);
  for (unsigned r = 1; r <= 5; ++r) {
    const auto an = apollonian(r);
    const auto dm = dual_map(an);
    const auto s = sierpinski(r);
    const auto faces = inner_faces(s);
    const auto& g = an.graph();
    CHECK(dm.vertex_map.size() == pow3(r));
    CHECK(dm.face_map.size() == (pow3(r) - 1) / 2);

    std::vector<Vertex> tops;
    std::set<Vertex> sverts;
    for (auto [a, sv] : dm.vertex_map) {
      tops.push_back(a);
      sverts.insert(sv);
      CHECK(dm.apollonian_vertex(sv) == a);
    }
    CHECK(tops == an.top_level());
    CHECK(sverts.size() == s.num_vertices());

    // Neighbors in S(3, r) share a neighbor in A(r).
    for (auto [x, y] : s.graph().edges())
      CHECK(common_neighbor(g, dm.apollonian_vertex(x), dm.apollonian_vertex(y)));

    std::set<std::size_t> used;
    std::vector<Vertex> interior;
    for (auto [z, face] : dm.face_map) {
      interior.push_back(z);
      used.insert(face);
      REQUIRE(face < faces.size());
      const auto [x, y] = faces[face].sits_on.endpoints;
      CHECK(g.has_edge(z, dm.apollonian_vertex(x)));
      CHECK(g.has_edge(z, dm.apollonian_vertex(y)));
    }
    CHECK(interior == an.inner_levels());
    CHECK(used.size() == faces.size());
  }
  const auto one = dual_map(apollonian(1));
  REQUIRE(one.face_map.size() == 1);
  CHECK(one.face_map[0] == std::pair<Vertex, std::size_t>{3, 0});
}

TEST_CASE("the face of (1,1) and (2,9) at level 3") {
  const auto an = apollonian(3);
  const auto dm = dual_map(an);
  const auto faces = inner_faces(sierpinski(3));
  auto sits_on = [&](LevelTag t) {
    const Vertex z = an.vertex_at(t);
    for (auto [v, face] : dm.face_map)
      if (v == z) {
        const auto [x, y] = faces[face].sits_on.endpoints;
        std::set<LevelTag> ends{tag(an, dm.apollonian_vertex(x)), tag(an, dm.apollonian_vertex(y))};
        return ends;
      }
    return std::set<LevelTag>{};
  };
  CHECK(sits_on({1, 1}) == std::set<LevelTag>{{3, 6}, {3, 8}});
  CHECK(sits_on({2, 9}) == std::set<LevelTag>{{3, 26}, {3, 27}});
}

TEST_CASE("sg values") {
  CHECK(apollonian_sg(0) == 4);
  CHECK(apollonian_sg(1) == 4);
  CHECK(apollonian_sg(2) == 9);
  CHECK(apollonian_sg(4) == 81);
  CHECK(apollonian_sg(5) == 243);
}

TEST_CASE("constructive witness") {
  for (unsigned r = 2; r <= 6; ++r) {
    const auto an = apollonian(r);
    const auto w = apollonian_witness(an);
    CHECK(w.set == an.top_level());
    CHECK(w.set.size() == apollonian_sg(r));
    CHECK(w.geodesics.size() == (pow3(r) - 1) / 2 + 3);
    std::set<Edge> pairs;
    for (const auto& pg : w.geodesics) {
      CHECK(pg.path.length() == 2);
      pairs.insert(std::minmax(pg.u, pg.v));
    }
    CHECK(pairs.size() == w.geodesics.size());
    CHECK(verify_witness(an.graph(), w).valid);
    CHECK(sg_lower_bound(an.graph()) == apollonian_sg(r));
  }
}

TEST_CASE("constructive witness: the extremal pair through a at level 3") {
  const auto an = apollonian(3);
  const auto w = apollonian_witness(an);
  const Vertex x = an.vertex_at({3, 1});
  const Vertex y = an.vertex_at({3, 14});
  bool found = false;
  for (const auto& pg : w.geodesics)
    if (std::minmax(pg.u, pg.v) == std::minmax(x, y)) {
      found = true;
      CHECK(pg.path.vertices[1] == ApollonianNetwork::kA);
    }
  CHECK(found);
  CHECK(w.geodesics.size() == 16);
}

TEST_CASE("small levels: exact solver") {
  for (unsigned r = 0; r <= 2; ++r) {
    const auto an = apollonian(r);
    const auto w = apollonian_witness(an);
    CHECK(w.set.size() == apollonian_sg(r));
    CHECK(verify_witness(an.graph(), w).valid);
    const auto exact = strong_geodetic_number(an.graph());
    CHECK(exact.status == SolveStatus::kOptimal);
    CHECK(exact.sg == apollonian_sg(r));
  }
  // Independent brute force where it is still cheap.
  CHECK(oracle::strong_geodetic_number(apollonian(0).graph()).sg == 4);
  CHECK(oracle::strong_geodetic_number(apollonian(1).graph()).sg == 4);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(apollonian(kMaxApollonianLevel + 1), ResourceError);
  CHECK(apollonian_sg(20) == pow3(20));
}

TEST_CASE("JSON annotations") {
  const auto j = apollonian_to_json(apollonian(1));
  CHECK(j["n"] == 7);
  CHECK(j["level"] == 1);
  CHECK(j["base"] == Json::array({0, 1, 2}));
  CHECK(j["levels"]["3"] == Json::array({0, 1}));
  CHECK(j["levels"]["6"] == Json::array({1, 3}));
  CHECK(j["genealogy"]["3"].size() == 3);
}
