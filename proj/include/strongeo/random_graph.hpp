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

#ifndef STRONGEO_RANDOM_GRAPH_HPP
#define STRONGEO_RANDOM_GRAPH_HPP

#include <cstdint>

#include "strongeo/graph.hpp"

namespace strongeo {

/// Erdos-Renyi G(n, p) driven by mt19937_64(seed). Each pair u < v, in
/// lexicographic order, consumes one raw 64-bit draw, so the output is the
/// same on every platform.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

/// Redraws G(n, p) from the same generator stream until it is connected.
/// Throws ResourceError after `attempts` disconnected draws.
Graph random_connected_gnp(std::size_t n, double p, std::uint64_t seed,
                           std::size_t attempts = 10'000);

}  // namespace strongeo

#endif  // STRONGEO_RANDOM_GRAPH_HPP
