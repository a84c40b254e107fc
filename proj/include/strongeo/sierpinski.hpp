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

// Base-3 Sierpinski graphs S(3,n).
//
// Vertices are the strings over {0,1,2} of length n; the vertex id is the
// string read as a base-3 number, so ids follow lexicographic label order.
// The edges are {s i j^k, s j i^k} for every scale k in 0..n-1, prefix s of
// length n-1-k and digits i < j: scale 0 gives the smallest triangles, scale
// k >= 1 the bridges between copies.
//
// In the standard drawing 0^n is on top, 1^n bottom-left and 2^n
// bottom-right. An edge {s 1 2^k, s 2 1^k} is horizontal; each bounded face
// sits on exactly one of them: the triangle of prefix s (length n-1) on
// {s1, s2}, the hole of copy s at scale k >= 1 on its bottom bridge.

#ifndef STRONGEO_SIERPINSKI_HPP
#define STRONGEO_SIERPINSKI_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "strongeo/graph.hpp"
#include "strongeo/graph_io.hpp"

namespace strongeo {

inline constexpr unsigned kMaxSierpinskiLevel = 12;

class SierpinskiGraph {
 public:
  /// Throws GraphError for n == 0 and ResourceError above kMaxSierpinskiLevel.
  static SierpinskiGraph build(unsigned n);

  unsigned level() const { return level_; }
  const Graph& graph() const { return graph_; }
  std::size_t num_vertices() const { return graph_.num_vertices(); }

  std::string label(Vertex v) const;
  Vertex vertex(std::string_view label) const;

  /// Ids of 0^n, 1^n, 2^n.
  std::array<Vertex, 3> extremal() const { return extremal_; }

 private:
  unsigned level_ = 0;
  Graph graph_;
  std::array<Vertex, 3> extremal_{};
};

inline SierpinskiGraph sierpinski(unsigned n) { return SierpinskiGraph::build(n); }

struct HorizontalEdge {
  Edge endpoints;  // (s 1 2^k, s 2 1^k)
  unsigned scale = 0;
  std::size_t prefix = 0;  // s as a base-3 number of length n-1-scale

  auto operator<=>(const HorizontalEdge&) const = default;
};

struct InnerFace {
  std::size_t id = 0;
  unsigned scale = 0;
  std::size_t prefix = 0;
  std::vector<Vertex> boundary;  // cyclic
  HorizontalEdge sits_on;
};

/// Number of bounded faces (and of horizontal edges): (3^n - 1) / 2.
std::size_t inner_face_count(unsigned n);

/// Position of the face (scale, prefix) in inner_faces(): faces are ordered
/// by scale, then prefix.
std::size_t inner_face_index(unsigned n, unsigned scale, std::size_t prefix);

/// Ordered like inner_faces(), so horizontal_edges()[i] is what face i sits on.
std::vector<HorizontalEdge> horizontal_edges(const SierpinskiGraph& s);

std::vector<InnerFace> inner_faces(const SierpinskiGraph& s);

/// Graph JSON plus "level", "extremal", "horizontal_edges" and "faces".
Json sierpinski_to_json(const SierpinskiGraph& s);

}  // namespace strongeo

#endif  // STRONGEO_SIERPINSKI_HPP
