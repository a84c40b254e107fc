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

#include "strongeo/sierpinski.hpp"

#include "strongeo/errors.hpp"

namespace strongeo {
namespace {

std::size_t pow3(unsigned k) {
  std::size_t p = 1;
  while (k-- > 0) p *= 3;
  return p;
}

// Value of the digit string j^k.
std::size_t repeated(std::size_t digit, unsigned k) { return digit * (pow3(k) - 1) / 2; }

// Id of s i t where s is the prefix, i one digit and t a tail of length k.
Vertex compose(std::size_t prefix, std::size_t digit, unsigned k, std::size_t tail) {
  return static_cast<Vertex>(prefix * pow3(k + 1) + digit * pow3(k) + tail);
}

// Tails of length k along the side of S(3,k) from i^k to j^k, in path order.
std::vector<std::size_t> side(std::size_t i, std::size_t j, unsigned k) {
  if (k == 0) return {0};
  const auto inner = side(i, j, k - 1);
  std::vector<std::size_t> out;
  out.reserve(2 * inner.size());
  for (std::size_t t : inner) out.push_back(i * pow3(k - 1) + t);
  for (std::size_t t : inner) out.push_back(j * pow3(k - 1) + t);
  return out;
}

HorizontalEdge horizontal_at(unsigned scale, std::size_t prefix) {
  return {Edge{compose(prefix, 1, scale, repeated(2, scale)),
               compose(prefix, 2, scale, repeated(1, scale))},
          scale, prefix};
}

}  // namespace

SierpinskiGraph SierpinskiGraph::build(unsigned n) {
  if (n == 0) throw GraphError("Sierpinski level must be at least 1");
  if (n > kMaxSierpinskiLevel) {
    throw ResourceError("Sierpinski level " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxSierpinskiLevel));
  }
  const std::size_t count = pow3(n);
  std::vector<Edge> edges;
  edges.reserve(3 * (count - 1) / 2);
  for (unsigned k = 0; k < n; ++k) {
    for (std::size_t s = 0; s < pow3(n - 1 - k); ++s) {
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = i + 1; j < 3; ++j) {
          edges.emplace_back(compose(s, i, k, repeated(j, k)), compose(s, j, k, repeated(i, k)));
        }
      }
    }
  }

  SierpinskiGraph out;
  out.level_ = n;
  std::map<Vertex, std::string> labels;
  for (Vertex v = 0; v < count; ++v) labels.emplace(v, out.label(v));
  out.graph_ = Graph::build(count, edges, std::move(labels));
  for (std::size_t d = 0; d < 3; ++d) out.extremal_[d] = static_cast<Vertex>(repeated(d, n));
  return out;
}

std::string SierpinskiGraph::label(Vertex v) const {
  std::string text(level_, '0');
  for (unsigned pos = level_; pos-- > 0;) {
    text[pos] = static_cast<char>('0' + v % 3);
    v /= 3;
  }
  return text;
}

Vertex SierpinskiGraph::vertex(std::string_view label) const {
  if (label.size() != level_) throw GraphError("label length must equal the level");
  Vertex v = 0;
  for (char c : label) {
    if (c < '0' || c > '2') throw GraphError("labels use only the digits 0, 1, 2");
    v = v * 3 + static_cast<Vertex>(c - '0');
  }
  return v;
}

std::size_t inner_face_count(unsigned n) { return (pow3(n) - 1) / 2; }

std::size_t inner_face_index(unsigned n, unsigned scale, std::size_t prefix) {
  std::size_t offset = 0;
  for (unsigned m = 0; m < scale; ++m) offset += pow3(n - 1 - m);
  return offset + prefix;
}

std::vector<HorizontalEdge> horizontal_edges(const SierpinskiGraph& s) {
  const unsigned n = s.level();
  std::vector<HorizontalEdge> out;
  out.reserve(inner_face_count(n));
  for (unsigned k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < pow3(n - 1 - k); ++p) out.push_back(horizontal_at(k, p));
  }
  return out;
}

std::vector<InnerFace> inner_faces(const SierpinskiGraph& s) {
  const unsigned n = s.level();
  std::vector<InnerFace> out;
  out.reserve(inner_face_count(n));
  for (unsigned k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < pow3(n - 1 - k); ++p) {
      InnerFace face{out.size(), k, p, {}, horizontal_at(k, p)};
      // Walk the hole: inner side of copy 0 from 1^k to 2^k, bridge, copy 2
      // from 0^k to 1^k, bridge, copy 1 from 2^k to 0^k, bridge back.
      // At k = 0 each side is one vertex, giving the triangle p0, p2, p1.
      const std::array<std::array<std::size_t, 3>, 3> walk{{{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}};
      for (const auto& [copy, from, to] : walk) {
        for (std::size_t t : side(from, to, k)) face.boundary.push_back(compose(p, copy, k, t));
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

Json sierpinski_to_json(const SierpinskiGraph& s) {
  Json j = graph_to_json(s.graph());
  j["level"] = s.level();
  j["extremal"] = s.extremal();
  Json horizontal = Json::array();
  for (const auto& h : horizontal_edges(s)) {
    horizontal.push_back({{"edge", {h.endpoints.first, h.endpoints.second}}, {"scale", h.scale}});
  }
  j["horizontal_edges"] = std::move(horizontal);
  Json faces = Json::array();
  for (const auto& f : inner_faces(s)) {
    faces.push_back({{"id", f.id},
                     {"boundary", f.boundary},
                     {"sits_on", {f.sits_on.endpoints.first, f.sits_on.endpoints.second}}});
  }
  j["faces"] = std::move(faces);
  return j;
}

}  // namespace strongeo
