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

#include "strongeo/reduction.hpp"

#include <algorithm>
#include <chrono>

#include "strongeo/errors.hpp"

namespace strongeo {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::string layer_suffix(Layer layer) {
  switch (layer) {
    case Layer::kTop: return "";
    case Layer::kMiddle: return "'";
    case Layer::kBottom: return "''";
  }
  return "";
}

class DominationSearch {
 public:
  enum class Outcome { kFound, kExhausted, kBudget };

  DominationSearch(const Graph& g, std::uint64_t budget) : budget_(budget), count_(g.num_vertices(), 0) {
    closed_.resize(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto& nb = closed_[v];
      nb.assign(g.neighbors(v).begin(), g.neighbors(v).end());
      nb.insert(std::lower_bound(nb.begin(), nb.end(), v), v);
      max_closed_ = std::max(max_closed_, nb.size());
    }
    undominated_ = g.num_vertices();
  }

  Outcome run(std::size_t k) {
    limit_ = k;
    return search();
  }

  std::vector<Vertex> chosen() const {
    auto out = chosen_;
    std::sort(out.begin(), out.end());
    return out;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void add(Vertex w, int delta) {
    for (Vertex x : closed_[w]) {
      if (delta > 0 && count_[x]++ == 0) --undominated_;
      if (delta < 0 && --count_[x] == 0) ++undominated_;
    }
  }

  Outcome search() {
    if (undominated_ == 0) return Outcome::kFound;
    if (++nodes_ > budget_) return Outcome::kBudget;
    const std::size_t left = limit_ - chosen_.size();
    if (left == 0 || undominated_ > left * max_closed_) return Outcome::kExhausted;

    const auto u = static_cast<Vertex>(std::find(count_.begin(), count_.end(), 0) - count_.begin());
    for (Vertex w : closed_[u]) {
      add(w, +1);
      chosen_.push_back(w);
      const Outcome outcome = search();
      if (outcome != Outcome::kExhausted) return outcome;
      chosen_.pop_back();
      add(w, -1);
    }
    return Outcome::kExhausted;
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t limit_ = 0;
  std::size_t max_closed_ = 0;
  std::size_t undominated_ = 0;
  std::vector<std::vector<Vertex>> closed_;
  std::vector<int> count_;
  std::vector<Vertex> chosen_;
};

}  // namespace

LayeredGadget LayeredGadget::build(const Graph& base) {
  require_connected(base);
  const auto n = static_cast<Vertex>(base.num_vertices());
  std::vector<Edge> edges = base.edges();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) edges.emplace_back(n + x, n + y);
  }
  for (Vertex x = 0; x < n; ++x) {
    edges.emplace_back(x, n + x);
    edges.emplace_back(n + x, 2 * n + x);
  }

  LayeredGadget gadget;
  gadget.base_ = base;
  std::map<Vertex, std::string> labels;
  for (Vertex v = 0; v < 3 * n; ++v) {
    const Vertex x = v % n;
    const std::string name = base.label(x).value_or(std::to_string(x));
    labels.emplace(v, name + layer_suffix(static_cast<Layer>(v / n)));
  }
  gadget.graph_ = Graph::build(3 * n, edges, std::move(labels));
  return gadget;
}

Layer LayeredGadget::layer_of(Vertex v) const {
  if (!graph_.contains(v)) throw GraphError("vertex " + std::to_string(v) + " is out of range");
  return static_cast<Layer>(v / base_order());
}

std::vector<Vertex> LayeredGadget::layer(Layer which) const {
  std::vector<Vertex> out;
  const auto offset = static_cast<Vertex>(static_cast<std::size_t>(which) * base_order());
  for (Vertex x = 0; x < base_order(); ++x) out.push_back(offset + x);
  return out;
}

std::optional<Vertex> undominated_vertex(const Graph& g, std::span<const Vertex> set) {
  std::vector<bool> dominated(g.num_vertices(), false);
  for (Vertex d : set) {
    if (!g.contains(d)) throw GraphError("vertex " + std::to_string(d) + " is out of range");
    dominated[d] = true;
    for (Vertex w : g.neighbors(d)) dominated[w] = true;
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!dominated[v]) return v;
  }
  return std::nullopt;
}

DominatingResult dominating_number(const Graph& g, const SolveLimits& limits) {
  limits.validate();
  const std::size_t n = g.num_vertices();
  if (n == 0) throw GraphError("graph has no vertices");

  DominatingResult result;
  std::uint64_t spent = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    DominationSearch search(g, limits.node_budget - spent);
    const auto outcome = search.run(k);
    spent += search.nodes();
    result.nodes_expanded = spent;
    if (outcome == DominationSearch::Outcome::kFound) {
      result.status = SolveStatus::kOptimal;
      result.gamma = k;
      result.witness.set = search.chosen();
      return result;
    }
    if (outcome == DominationSearch::Outcome::kBudget) break;
  }
  result.status = SolveStatus::kIndeterminate;
  result.gamma = n;
  result.witness.set.resize(n);
  for (Vertex v = 0; v < n; ++v) result.witness.set[v] = v;
  return result;
}

CoverWitness lift_dominating_to_sg(const LayeredGadget& gadget, const DominatingWitness& d) {
  const Graph& base = gadget.base();
  const auto n = static_cast<Vertex>(gadget.base_order());
  std::vector<Vertex> dom = d.set;
  std::sort(dom.begin(), dom.end());
  dom.erase(std::unique(dom.begin(), dom.end()), dom.end());
  if (auto missed = undominated_vertex(base, dom)) {
    throw GraphError("set does not dominate vertex " + std::to_string(*missed));
  }

  CoverWitness w;
  w.set = dom;
  for (Vertex x : gadget.layer(Layer::kBottom)) w.set.push_back(x);

  for (Vertex y = 0; y < n; ++y) {
    if (std::binary_search(dom.begin(), dom.end(), y)) continue;
    const auto nbrs = base.neighbors(y);
    const Vertex x = *std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex c) {
      return std::binary_search(dom.begin(), dom.end(), c);
    });
    w.geodesics.push_back(
        {x, gadget.bottom(y), GeodesicPath{{x, y, gadget.middle(y), gadget.bottom(y)}}});
  }
  if (n == 1) {
    // K1: the single pair {0, 0''} runs through 0'.
    w.geodesics.push_back({0, gadget.bottom(0), GeodesicPath{{0, gadget.middle(0), gadget.bottom(0)}}});
  }
  for (Vertex v = 1; v < n; ++v) {
    w.geodesics.push_back({gadget.bottom(0), gadget.bottom(v),
                           GeodesicPath{{gadget.bottom(0), gadget.middle(0), gadget.middle(v),
                                         gadget.bottom(v)}}});
  }
  std::sort(w.geodesics.begin(), w.geodesics.end());
  return w;
}

CoverWitness normalize_gadget_witness(const LayeredGadget& gadget, const CoverWitness& w,
                                      const SolveLimits& limits) {
  std::vector<Vertex> kept;
  for (Vertex v : w.set) {
    if (gadget.layer_of(v) != Layer::kMiddle) kept.push_back(v);
  }
  if (kept.size() == w.set.size()) return w;

  auto attempt = find_assignment(gadget.graph(), kept, limits);
  switch (attempt.status) {
    case CoverStatus::kCovered: return std::move(attempt.witness);
    case CoverStatus::kNoCover:
      throw InternalError("dropping middle-layer vertices lost coverage");
    case CoverStatus::kIndeterminate: break;
  }
  throw ResourceError("limits reached while normalizing a gadget witness");
}

DominatingWitness extract_dominating_from_sg(const LayeredGadget& gadget, const CoverWitness& w) {
  if (auto verdict = verify_witness(gadget.graph(), w); !verdict) {
    throw GraphError("witness does not verify on the gadget: " + verdict.violation);
  }
  DominatingWitness d;
  std::size_t bottoms = 0;
  for (Vertex v : w.set) {
    switch (gadget.layer_of(v)) {
      case Layer::kTop: d.set.push_back(v); break;
      case Layer::kMiddle:
        throw GraphError("witness holds middle-layer vertex " + std::to_string(v) +
                         "; normalize it first");
      case Layer::kBottom: ++bottoms; break;
    }
  }
  if (bottoms != gadget.base_order()) throw GraphError("witness misses part of the bottom layer");
  std::sort(d.set.begin(), d.set.end());
  if (auto missed = undominated_vertex(gadget.base(), d.set)) {
    throw InternalError("top part of a strong geodetic set leaves vertex " +
                        std::to_string(*missed) + " undominated");
  }
  return d;
}

EquivalenceReport check_equivalence(const Graph& g, const SolveLimits& limits) {
  const auto gadget = build_gadget(g);
  EquivalenceReport report;
  report.n = g.num_vertices();
  report.m = g.num_edges();

  auto start = Clock::now();
  const auto dom = dominating_number(g, limits);
  report.dominating_ms = elapsed_ms(start);
  start = Clock::now();
  const auto sg = strong_geodetic_number(gadget.graph(), limits);
  report.sg_ms = elapsed_ms(start);

  report.gamma = dom.gamma;
  report.sg_gadget = sg.sg;
  report.resolved = dom.status == SolveStatus::kOptimal && sg.status == SolveStatus::kOptimal;
  if (!report.resolved) {
    report.violations.push_back("limits reached before both exact values were known");
    return report;
  }

  report.identity_holds = report.sg_gadget == report.gamma + report.n;
  if (!report.identity_holds) {
    report.violations.push_back("sg(gadget) = " + std::to_string(report.sg_gadget) +
                                " but gamma + n = " + std::to_string(report.gamma + report.n));
  }

  const auto bottom = gadget.layer(Layer::kBottom);
  report.bottom_in_witness = std::includes(sg.witness.set.begin(), sg.witness.set.end(),
                                           bottom.begin(), bottom.end());
  if (!report.bottom_in_witness) {
    report.violations.push_back("minimum witness does not contain the bottom layer");
  }

  try {
    const auto normalized = normalize_gadget_witness(gadget, sg.witness, limits);
    report.normalization_holds = normalized.set.size() <= sg.witness.set.size() &&
                                 verify_witness(gadget.graph(), normalized).valid;
    const auto extracted = extract_dominating_from_sg(gadget, normalized);
    report.extraction_holds = extracted.set.size() + report.n == normalized.set.size() &&
                              extracted.set.size() == report.gamma;
  } catch (const std::exception& e) {
    report.violations.push_back(std::string("normalize/extract failed: ") + e.what());
  }
  if (!report.normalization_holds) report.violations.push_back("normalization did not hold");
  if (!report.extraction_holds) report.violations.push_back("extraction did not give gamma");

  const auto lifted = lift_dominating_to_sg(gadget, dom.witness);
  report.lift_holds = verify_witness(gadget.graph(), lifted).valid &&
                      lifted.set.size() == report.gamma + report.n;
  if (!report.lift_holds) report.violations.push_back("lifted dominating set is not a witness");
  return report;
}

Json report_to_json(const EquivalenceReport& report) {
  Json j;
  j["n"] = report.n;
  j["m"] = report.m;
  j["gamma"] = report.gamma;
  j["sg_gadget"] = report.sg_gadget;
  j["status"] = report.resolved ? "optimal" : "indeterminate";
  j["identity_holds"] = report.identity_holds;
  j["bottom_layer_in_witness"] = report.bottom_in_witness;
  j["normalization_holds"] = report.normalization_holds;
  j["extraction_holds"] = report.extraction_holds;
  j["lift_holds"] = report.lift_holds;
  j["violations"] = report.violations;
  j["runtimes"] = {{"dominating_ms", report.dominating_ms}, {"sg_ms", report.sg_ms}};
  return j;
}

Json gadget_to_json(const LayeredGadget& gadget) {
  Json j = graph_to_json(gadget.graph());
  j["layers"] = {{"top", gadget.layer(Layer::kTop)},
                 {"middle", gadget.layer(Layer::kMiddle)},
                 {"bottom", gadget.layer(Layer::kBottom)}};
  return j;
}

}  // namespace strongeo
