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

// Complete Apollonian networks A(r) and their link to Sierpinski graphs.
//
// A(r) starts from the triangle a, b, c (ids 0, 1, 2). Round k = 0..r puts
// one new vertex, tagged (k, i), into each of the 3^k triangular faces left
// by round k-1. Faces carry corner roles 0, 1, 2 (base: c, b, a). Inserting
// v into a face splits it into three subfaces; subface d replaces the corner
// of role d by v and keeps the other corners in place. A face reached by
// the subface digits d1..dm therefore has the string d1..dm, and the vertex
// (k, i) sits in the face whose string is i-1 written with k base-3 digits.
//
// With this bookkeeping the inner dual of A(r) is S(3,r+1) with face strings
// as labels, the last round T_r corresponds to the vertices of S(3,r), and
// the vertex (k, i) with k < r corresponds to the inner face of S(3,r) with
// prefix i-1 and scale r-1-k.

#ifndef STRONGEO_APOLLONIAN_HPP
#define STRONGEO_APOLLONIAN_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "strongeo/graph.hpp"
#include "strongeo/graph_io.hpp"
#include "strongeo/solver.hpp"

namespace strongeo {

inline constexpr unsigned kMaxApollonianLevel = 11;

struct LevelTag {
  unsigned level = 0;
  std::size_t index = 0;  // 1-based within the level

  auto operator<=>(const LevelTag&) const = default;
};

using Face = std::array<Vertex, 3>;  // corners by role 0, 1, 2

class ApollonianNetwork {
 public:
  /// Throws ResourceError above kMaxApollonianLevel.
  static ApollonianNetwork build(unsigned r);

  unsigned level() const { return level_; }
  const Graph& graph() const { return graph_; }

  static constexpr Vertex kA = 0;
  static constexpr Vertex kB = 1;
  static constexpr Vertex kC = 2;
  std::array<Vertex, 3> base() const { return {kA, kB, kC}; }

  /// Empty for a, b, c.
  std::optional<LevelTag> level_of(Vertex v) const;
  Vertex vertex_at(LevelTag tag) const;

  /// Face (by role) that an inserted vertex was placed into.
  const Face& inserted_into(Vertex v) const;

  /// The last-round vertices T_r, ascending.
  std::vector<Vertex> top_level() const;

  /// Interior vertices of rounds 0..r-1, ascending.
  std::vector<Vertex> inner_levels() const;

 private:
  unsigned level_ = 0;
  Graph graph_;
  std::vector<Face> genealogy_;  // indexed by id - 3
};

inline ApollonianNetwork apollonian(unsigned r) { return ApollonianNetwork::build(r); }

/// First id of round k.
Vertex first_of_level(unsigned k);

struct InnerDual {
  Graph dual;
  std::vector<Face> faces;            // bounded faces of A(r), indexed by dual vertex
  std::vector<Vertex> to_sierpinski;  // dual vertex -> vertex of S(3, r+1)
};

/// Bounded faces of A(r) and their adjacency, with the isomorphism onto
/// S(3, r+1) checked edge by edge. A failed check throws InternalError.
InnerDual inner_dual(const ApollonianNetwork& an);

struct DualMap {
  unsigned level = 0;
  // (vertex of T_r, vertex of S(3,r)), ascending in both.
  std::vector<std::pair<Vertex, Vertex>> vertex_map;
  // (interior vertex of rounds 0..r-1, index into inner_faces(S(3,r))).
  std::vector<std::pair<Vertex, std::size_t>> face_map;

  Vertex apollonian_vertex(Vertex sierpinski_vertex) const;
};

/// Requires r >= 1. Bijectivity and adjacency compatibility are checked;
/// violations throw InternalError.
DualMap dual_map(const ApollonianNetwork& an);

/// 4 for r <= 1, otherwise 3^r.
std::size_t apollonian_sg(unsigned r);

/// Optimal witness on A(r). For r >= 2 the set is T_r, with one path x-z-y
/// per interior vertex z (x, y from the horizontal edge its face sits on)
/// and one path through a, b or c per pair of extremal vertices. For r <= 1
/// the exact solver provides the witness.
CoverWitness apollonian_witness(const ApollonianNetwork& an);

/// Graph JSON plus "level", "base", "levels" ({"id": [k, i]}) and
/// "genealogy" ({"id": [role0, role1, role2]}).
Json apollonian_to_json(const ApollonianNetwork& an);

}  // namespace strongeo

#endif  // STRONGEO_APOLLONIAN_HPP
