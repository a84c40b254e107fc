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

// Dominating set -> strong geodetic set reduction.
//
// The gadget of G = (V, E) has three copies of V: the top layer induces G,
// the middle layer V' is a clique, and the bottom layer V'' is independent.
// Each x is joined to x' and each x' to x''. S is a dominating set of G
// exactly when S + V'' is strong geodetic in the gadget, so
// sg(gadget) = gamma(G) + |V(G)|.

#ifndef STRONGEO_REDUCTION_HPP
#define STRONGEO_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strongeo/graph.hpp"
#include "strongeo/graph_io.hpp"
#include "strongeo/solver.hpp"

namespace strongeo {

enum class Layer { kTop, kMiddle, kBottom };

class LayeredGadget {
 public:
  /// Throws DisconnectedError unless base is connected.
  static LayeredGadget build(const Graph& base);

  const Graph& graph() const { return graph_; }
  const Graph& base() const { return base_; }
  std::size_t base_order() const { return base_.num_vertices(); }

  // Ids: top 0..n-1, middle n..2n-1, bottom 2n..3n-1.
  Vertex top(Vertex x) const { return x; }
  Vertex middle(Vertex x) const { return static_cast<Vertex>(base_order() + x); }
  Vertex bottom(Vertex x) const { return static_cast<Vertex>(2 * base_order() + x); }

  Layer layer_of(Vertex v) const;
  Vertex origin(Vertex v) const { return static_cast<Vertex>(v % base_order()); }

  std::vector<Vertex> layer(Layer which) const;

 private:
  Graph base_;
  Graph graph_;
};

inline LayeredGadget build_gadget(const Graph& g) { return LayeredGadget::build(g); }

struct DominatingWitness {
  std::vector<Vertex> set;  // ascending

  bool operator==(const DominatingWitness&) const = default;
};

/// First vertex of g neither in the set nor adjacent to it.
std::optional<Vertex> undominated_vertex(const Graph& g, std::span<const Vertex> set);

inline bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  return !undominated_vertex(g, set).has_value();
}

struct DominatingResult {
  SolveStatus status = SolveStatus::kIndeterminate;
  std::size_t gamma = 0;  // exact when optimal, otherwise an upper bound
  DominatingWitness witness;
  std::uint64_t nodes_expanded = 0;
};

/// Exact domination number by iterative deepening: branch on the closed
/// neighborhood of the first undominated vertex. The node budget applies to
/// the whole search.
DominatingResult dominating_number(const Graph& g, const SolveLimits& limits = {});

/// S = D + V''. Each top vertex outside D gets x-y-y'-y'' from its least
/// dominator x; the other layers are covered by the star of pairs
/// {0'', v''} with paths 0''-0'-v'-v''. Throws GraphError when D does not
/// dominate the base graph.
CoverWitness lift_dominating_to_sg(const LayeredGadget& gadget, const DominatingWitness& d);

/// Drops middle-layer vertices from the set and re-solves the assignment
/// for what is left. Throws InternalError if the smaller set fails to
/// cover and ResourceError if the limits cut the search short.
CoverWitness normalize_gadget_witness(const LayeredGadget& gadget, const CoverWitness& w,
                                      const SolveLimits& limits = {});

/// Top-layer part of a verified, normalized witness. Throws GraphError for
/// witnesses that fail verification, miss part of V'' or still hold middle
/// vertices, and InternalError if the result does not dominate.
DominatingWitness extract_dominating_from_sg(const LayeredGadget& gadget, const CoverWitness& w);

struct EquivalenceReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t gamma = 0;
  std::size_t sg_gadget = 0;
  bool resolved = false;           // both exact solvers finished
  bool identity_holds = false;     // sg_gadget == gamma + n
  bool bottom_in_witness = false;  // the minimum witness contains V''
  bool normalization_holds = false;
  bool extraction_holds = false;
  bool lift_holds = false;
  double dominating_ms = 0;
  double sg_ms = 0;
  std::vector<std::string> violations;

  bool all_hold() const { return resolved && violations.empty(); }
};

/// Solves both sides exactly and checks every link of the reduction on
/// this instance.
EquivalenceReport check_equivalence(const Graph& g, const SolveLimits& limits = {});

Json report_to_json(const EquivalenceReport& report);

/// Graph JSON plus {"layers": {"top": [...], "middle": [...], "bottom": [...]}}.
Json gadget_to_json(const LayeredGadget& gadget);

}  // namespace strongeo

#endif  // STRONGEO_REDUCTION_HPP
