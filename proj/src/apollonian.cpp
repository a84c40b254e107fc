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

#include "strongeo/apollonian.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "strongeo/errors.hpp"
#include "strongeo/sierpinski.hpp"

namespace strongeo {
namespace {

std::size_t pow3(unsigned k) {
  std::size_t p = 1;
  while (k-- > 0) p *= 3;
  return p;
}

// Corner roles of the outer triangle.
constexpr Face kBaseFace{ApollonianNetwork::kC, ApollonianNetwork::kB, ApollonianNetwork::kA};

Face subface(const Face& face, std::size_t digit, Vertex inserted) {
  Face out = face;
  out[digit] = inserted;
  return out;
}

std::string tag_text(const LevelTag& tag) {
  return "(" + std::to_string(tag.level) + "," + std::to_string(tag.index) + ")";
}

}  // namespace

Vertex first_of_level(unsigned k) { return static_cast<Vertex>(3 + (pow3(k) - 1) / 2); }

ApollonianNetwork ApollonianNetwork::build(unsigned r) {
  if (r > kMaxApollonianLevel) {
    throw ResourceError("Apollonian level " + std::to_string(r) + " exceeds the limit of " +
                        std::to_string(kMaxApollonianLevel));
  }
  ApollonianNetwork an;
  an.level_ = r;
  const std::size_t n = first_of_level(r + 1);

  std::vector<Edge> edges{{kA, kB}, {kB, kC}, {kA, kC}};
  std::map<Vertex, std::string> labels{{kA, "a"}, {kB, "b"}, {kC, "c"}};
  an.genealogy_.reserve(n - 3);

  // Faces of the previous round in string order; appending subfaces in digit
  // order keeps the next round in string order too.
  std::vector<Face> faces{kBaseFace};
  for (unsigned k = 0; k <= r; ++k) {
    std::vector<Face> next;
    next.reserve(3 * faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const Vertex v = first_of_level(k) + static_cast<Vertex>(i);
      for (Vertex corner : faces[i]) edges.emplace_back(corner, v);
      labels.emplace(v, tag_text({k, i + 1}));
      an.genealogy_.push_back(faces[i]);
      for (std::size_t d = 0; d < 3; ++d) next.push_back(subface(faces[i], d, v));
    }
    faces = std::move(next);
  }
  an.graph_ = Graph::build(n, edges, std::move(labels));
  return an;
}

std::optional<LevelTag> ApollonianNetwork::level_of(Vertex v) const {
  if (!graph_.contains(v)) throw GraphError("vertex " + std::to_string(v) + " is out of range");
  if (v < 3) return std::nullopt;
  unsigned k = 0;
  while (first_of_level(k + 1) <= v) ++k;
  return LevelTag{k, v - first_of_level(k) + 1};
}

Vertex ApollonianNetwork::vertex_at(LevelTag tag) const {
  if (tag.level > level_ || tag.index < 1 || tag.index > pow3(tag.level)) {
    throw GraphError("no vertex " + tag_text(tag) + " in A(" + std::to_string(level_) + ")");
  }
  return first_of_level(tag.level) + static_cast<Vertex>(tag.index - 1);
}

const Face& ApollonianNetwork::inserted_into(Vertex v) const {
  if (v < 3 || !graph_.contains(v)) {
    throw GraphError("vertex " + std::to_string(v) + " was not inserted into a face");
  }
  return genealogy_[v - 3];
}

std::vector<Vertex> ApollonianNetwork::top_level() const {
  std::vector<Vertex> out;
  for (Vertex v = first_of_level(level_); v < graph_.num_vertices(); ++v) out.push_back(v);
  return out;
}

std::vector<Vertex> ApollonianNetwork::inner_levels() const {
  std::vector<Vertex> out;
  for (Vertex v = 3; v < first_of_level(level_); ++v) out.push_back(v);
  return out;
}

InnerDual inner_dual(const ApollonianNetwork& an) {
  const unsigned r = an.level();
  const auto sier = sierpinski(r + 1);

  InnerDual out;
  for (Vertex v : an.top_level()) {
    for (std::size_t d = 0; d < 3; ++d) out.faces.push_back(subface(an.inserted_into(v), d, v));
  }

  std::map<Edge, std::vector<Vertex>> incident;
  for (Vertex f = 0; f < out.faces.size(); ++f) {
    const auto& [x, y, z] = out.faces[f];
    for (const auto& [p, q] : {Edge{x, y}, Edge{y, z}, Edge{x, z}}) {
      incident[std::minmax(p, q)].push_back(f);
    }
  }
  std::vector<Edge> dual_edges;
  for (const auto& [edge, faces] : incident) {
    if (faces.size() > 2) {
      throw InternalError("edge " + std::to_string(edge.first) + "-" +
                          std::to_string(edge.second) + " borders more than two faces");
    }
    if (faces.size() == 2) dual_edges.emplace_back(faces[0], faces[1]);
  }
  out.dual = Graph::build(out.faces.size(), dual_edges);

  // Face f has string f in base 3, which is also its Sierpinski id.
  out.to_sierpinski.resize(out.faces.size());
  for (Vertex f = 0; f < out.faces.size(); ++f) out.to_sierpinski[f] = f;

  const Graph& target = sier.graph();
  if (out.dual.num_vertices() != target.num_vertices() ||
      out.dual.num_edges() != target.num_edges()) {
    throw InternalError("inner dual of A(" + std::to_string(r) + ") has " +
                        std::to_string(out.dual.num_vertices()) + " vertices and " +
                        std::to_string(out.dual.num_edges()) + " edges, S(3," +
                        std::to_string(r + 1) + ") has " + std::to_string(target.num_vertices()) +
                        " and " + std::to_string(target.num_edges()));
  }
  for (const auto& [f, g] : out.dual.edges()) {
    if (!target.has_edge(out.to_sierpinski[f], out.to_sierpinski[g])) {
      throw InternalError("dual edge " + sier.label(f) + "-" + sier.label(g) +
                          " is not a Sierpinski edge");
    }
  }
  return out;
}

Vertex DualMap::apollonian_vertex(Vertex sierpinski_vertex) const {
  return vertex_map.at(sierpinski_vertex).first;
}

DualMap dual_map(const ApollonianNetwork& an) {
  const unsigned r = an.level();
  if (r == 0) throw GraphError("the dual map needs r >= 1");
  const auto sier = sierpinski(r);
  const auto faces = inner_faces(sier);
  const Graph& g = an.graph();

  DualMap out;
  out.level = r;
  const Vertex first = first_of_level(r);
  for (Vertex v : an.top_level()) out.vertex_map.emplace_back(v, v - first);

  for (Vertex z : an.inner_levels()) {
    const LevelTag tag = *an.level_of(z);
    out.face_map.emplace_back(z, inner_face_index(r, r - 1 - tag.level, tag.index - 1));
  }

  if (out.vertex_map.size() != sier.num_vertices() || out.face_map.size() != faces.size()) {
    throw InternalError("dual map sizes do not match S(3," + std::to_string(r) + ")");
  }
  // Adjacent Sierpinski vertices are faces sharing an edge of A(r-1): their
  // T_r vertices see both ends of that edge.
  for (const auto& [p, q] : sier.graph().edges()) {
    const Vertex x = out.apollonian_vertex(p);
    const Vertex y = out.apollonian_vertex(q);
    std::vector<Vertex> common;
    std::set_intersection(g.neighbors(x).begin(), g.neighbors(x).end(), g.neighbors(y).begin(),
                          g.neighbors(y).end(), std::back_inserter(common));
    if (common.size() != 2 || !g.has_edge(common[0], common[1])) {
      throw InternalError("T_r vertices of adjacent Sierpinski vertices " + sier.label(p) + ", " +
                          sier.label(q) + " do not share a face edge");
    }
  }
  for (const auto& [z, face] : out.face_map) {
    const auto [p, q] = faces[face].sits_on.endpoints;
    if (!g.has_edge(z, out.apollonian_vertex(p)) || !g.has_edge(z, out.apollonian_vertex(q))) {
      throw InternalError("vertex " + std::to_string(z) +
                          " is not adjacent to the ends of the edge its face sits on");
    }
  }
  return out;
}

std::size_t apollonian_sg(unsigned r) {
  constexpr unsigned kMaxExponent = 40;
  if (r > kMaxExponent) throw ResourceError("3^" + std::to_string(r) + " overflows");
  return r <= 1 ? 4 : pow3(r);
}

CoverWitness apollonian_witness(const ApollonianNetwork& an) {
  const unsigned r = an.level();
  if (r <= 1) {
    auto solved = strong_geodetic_number(an.graph());
    if (solved.status != SolveStatus::kOptimal) {
      throw InternalError("exact solver did not finish on A(" + std::to_string(r) + ")");
    }
    return std::move(solved.witness);
  }

  const Graph& g = an.graph();
  const auto sier = sierpinski(r);
  const auto faces = inner_faces(sier);
  const auto map = dual_map(an);

  CoverWitness w;
  w.set = an.top_level();
  auto add_path = [&](Vertex x, Vertex mid, Vertex y) {
    if (x > y) std::swap(x, y);
    if (!g.has_edge(x, mid) || !g.has_edge(mid, y) || g.has_edge(x, y)) {
      throw InternalError("path " + std::to_string(x) + "-" + std::to_string(mid) + "-" +
                          std::to_string(y) + " is not a geodesic");
    }
    w.geodesics.push_back(PairGeodesic{x, y, GeodesicPath{{x, mid, y}}});
  };

  for (const auto& [z, face] : map.face_map) {
    const auto [p, q] = faces[face].sits_on.endpoints;
    add_path(map.apollonian_vertex(p), z, map.apollonian_vertex(q));
  }
  const auto ext = sier.extremal();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Vertex x = map.apollonian_vertex(ext[i]);
      const Vertex y = map.apollonian_vertex(ext[j]);
      const auto base = an.base();
      const auto via = std::find_if(base.begin(), base.end(), [&](Vertex b) {
        return g.has_edge(x, b) && g.has_edge(y, b);
      });
      if (via == base.end()) throw InternalError("extremal vertices share no base vertex");
      add_path(x, *via, y);
    }
  }

  std::sort(w.geodesics.begin(), w.geodesics.end());
  for (std::size_t i = 1; i < w.geodesics.size(); ++i) {
    if (w.geodesics[i - 1].u == w.geodesics[i].u && w.geodesics[i - 1].v == w.geodesics[i].v) {
      throw InternalError("pair assigned twice in the Apollonian witness");
    }
  }
  return w;
}

Json apollonian_to_json(const ApollonianNetwork& an) {
  Json j = graph_to_json(an.graph());
  j["level"] = an.level();
  j["base"] = an.base();
  Json levels = Json::object();
  Json genealogy = Json::object();
  for (Vertex v = 3; v < an.graph().num_vertices(); ++v) {
    const auto tag = *an.level_of(v);
    levels[std::to_string(v)] = {tag.level, tag.index};
    genealogy[std::to_string(v)] = an.inserted_into(v);
  }
  j["levels"] = std::move(levels);
  j["genealogy"] = std::move(genealogy);
  return j;
}

}  // namespace strongeo
