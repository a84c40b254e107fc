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

// Strong geodetic sets.
//
// A set S is strong geodetic when one fixed geodesic per unordered pair of
// S can be selected so that S together with the selected paths covers
// every vertex. A CoverWitness lists only the pairs needed for coverage;
// the remaining pairs may be completed with any geodesic, which can only
// add coverage.

#ifndef STRONGEO_SOLVER_HPP
#define STRONGEO_SOLVER_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strongeo/geodesic.hpp"
#include "strongeo/graph.hpp"

namespace strongeo {

struct PairGeodesic {
  Vertex u = 0;
  Vertex v = 0;
  GeodesicPath path;

  auto operator<=>(const PairGeodesic&) const = default;
};

struct CoverWitness {
  std::vector<Vertex> set;  // ascending
  std::vector<PairGeodesic> geodesics;

  bool operator==(const CoverWitness&) const = default;
};

struct SolveLimits {
  std::uint64_t geodesic_cap = kDefaultGeodesicCap;  // per pair
  std::uint64_t node_budget = 50'000'000;            // per cover search
  std::optional<std::chrono::milliseconds> time_budget;

  /// Throws GraphError unless every limit is positive.
  void validate() const;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t pairs_enumerated = 0;
  std::uint64_t geodesics_enumerated = 0;
  std::uint64_t subsets_tried = 0;

  SearchStats& operator+=(const SearchStats& other);
};

/// Outcome of checking a witness. Converts to true only when valid.
struct Verdict {
  bool valid = false;
  std::string violation;
  std::optional<Edge> pair;  // offending pair, when one is to blame

  explicit operator bool() const { return valid; }
};

/// Trusted check used as the oracle for every constructive routine:
/// ids in range, S duplicate-free, every pair drawn from S and listed once,
/// every path a geodesic joining exactly its pair, and S plus the paths
/// covering all vertices.
Verdict verify_witness(const Graph& g, const CoverWitness& w);

enum class CoverStatus { kCovered, kNoCover, kIndeterminate };
enum class SolveStatus { kOptimal, kIndeterminate };

std::string to_string(CoverStatus status);
std::string to_string(SolveStatus status);

struct AssignmentResult {
  CoverStatus status = CoverStatus::kIndeterminate;
  CoverWitness witness;  // meaningful when kCovered
  SearchStats stats;
};

/// Decides whether S admits a covering selection of geodesics. kNoCover is
/// reported only after an exhaustive search over complete geodesic lists;
/// a truncated list or an exhausted budget yields kIndeterminate.
AssignmentResult find_assignment(const Graph& g, std::vector<Vertex> set,
                                 const SolveLimits& limits = {});

struct SgResult {
  SolveStatus status = SolveStatus::kIndeterminate;
  std::size_t sg = 0;           // exact when kOptimal, otherwise an upper bound
  std::size_t lower_bound = 0;  // proven lower bound
  CoverWitness witness;
  SearchStats stats;
};

/// Exact strong geodetic number. Simplicial vertices are forced in and the
/// remaining vertices are tried in lexicographic order of subsets, by
/// increasing size from sg_lower_bound; the first covered set is returned,
/// so the witness set is the lexicographically least optimum.
SgResult strong_geodetic_number(const Graph& g, const SolveLimits& limits = {});

/// max(#simplicial, 2, least k with k + C(k,2) * (diam - 1) >= n); 1 for K1.
std::size_t sg_lower_bound(const Graph& g);

struct GeodeticResult {
  std::size_t value = 0;
  std::vector<Vertex> set;
};

/// Classic geodetic number: all geodesics of every pair count at once.
GeodeticResult geodetic_number(const Graph& g);

}  // namespace strongeo

#endif  // STRONGEO_SOLVER_HPP
