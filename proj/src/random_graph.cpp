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

#include "strongeo/random_graph.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "strongeo/errors.hpp"

namespace strongeo {
namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
}

Graph draw(std::size_t n, double p, std::mt19937_64& rng) {
  // p = 1 must accept every draw, including the maximum.
  const bool always = p >= 1.0;
  const auto threshold =
      always ? 0 : static_cast<std::uint64_t>(std::ldexp(p, std::numeric_limits<std::uint64_t>::digits));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t x = rng();
      if (always || x < threshold) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

}  // namespace

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  check_probability(p);
  std::mt19937_64 rng(seed);
  return draw(n, p, rng);
}

Graph random_connected_gnp(std::size_t n, double p, std::uint64_t seed, std::size_t attempts) {
  check_probability(p);
  if (n == 0) throw GraphError("a connected graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < attempts; ++i) {
    Graph g = draw(n, p, rng);
    if (is_connected(g)) return g;
  }
  throw ResourceError("no connected G(" + std::to_string(n) + ", p) draw within " +
                      std::to_string(attempts) + " attempts");
}

}  // namespace strongeo
