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

#include "strongeo/solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "combinations.hpp"
#include "strongeo/errors.hpp"

namespace strongeo {
namespace {

using Bits = boost::dynamic_bitset<std::uint64_t>;
using Clock = std::chrono::steady_clock;

struct Deadline {
  std::optional<Clock::time_point> at;

  static Deadline from(const SolveLimits& limits) {
    Deadline d;
    if (limits.time_budget) d.at = Clock::now() + *limits.time_budget;
    return d;
  }
  bool passed() const { return at && Clock::now() >= *at; }
};

// Geodesic lists per pair u < v, enumerated on first use and shared by every
// candidate set of one solve.
class GeodesicCache {
 public:
  GeodesicCache(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap), rows_(g.num_vertices()) {}

  const GeodesicList& get(Vertex u, Vertex v, SearchStats& stats) {
    auto [it, inserted] = lists_.try_emplace(Edge{u, v});
    if (inserted) {
      it->second = all_geodesics(g_, row(u), row(v), cap_);
      ++stats.pairs_enumerated;
      stats.geodesics_enumerated += it->second.paths.size();
    }
    return it->second;
  }

 private:
  const DistanceRow& row(Vertex v) {
    if (!rows_[v]) rows_[v] = bfs_distances(g_, v);
    return *rows_[v];
  }

  const Graph& g_;
  std::uint64_t cap_;
  std::vector<std::optional<DistanceRow>> rows_;
  std::map<Edge, GeodesicList> lists_;
};

struct Choice {
  std::size_t pair = 0;
  const GeodesicPath* path = nullptr;
  std::vector<Vertex> covers;  // interior vertices outside S, ascending
};

// Exact cover search: constraints are uncovered vertices, options are
// (pair, geodesic) choices, and each pair may be used once. Branches on the
// uncovered vertex with the fewest live options.
class CoverSearch {
 public:
  enum class Outcome { kFound, kExhausted, kBudget };

  CoverSearch(std::size_t n, std::size_t num_pairs, std::vector<Choice> choices,
              std::uint64_t budget, const Deadline& deadline, SearchStats& stats)
      : choices_(std::move(choices)),
        covering_(n),
        pair_choices_(num_pairs),
        used_(num_pairs, false),
        budget_(budget),
        deadline_(deadline),
        stats_(stats) {
    for (std::size_t c = 0; c < choices_.size(); ++c) {
      pair_choices_[choices_[c].pair].push_back(c);
      for (Vertex w : choices_[c].covers) covering_[w].push_back(c);
    }
  }

  Outcome run(const Bits& uncovered) { return search(uncovered); }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  const Choice& choice(std::size_t c) const { return choices_[c]; }

 private:
  std::size_t gain(const Choice& c, const Bits& uncovered) const {
    std::size_t k = 0;
    for (Vertex w : c.covers) k += uncovered.test(w) ? 1 : 0;
    return k;
  }

  Outcome search(const Bits& uncovered) {
    if (uncovered.none()) return Outcome::kFound;
    ++stats_.nodes_expanded;
    ++local_nodes_;
    if (local_nodes_ > budget_) return Outcome::kBudget;
    if ((local_nodes_ & 1023U) == 0 && deadline_.passed()) return Outcome::kBudget;

    // Even the best choice of every unused pair cannot cover what is left.
    const std::size_t need = uncovered.count();
    std::size_t reachable = 0;
    for (std::size_t p = 0; p < pair_choices_.size() && reachable < need; ++p) {
      if (used_[p]) continue;
      std::size_t best = 0;
      for (std::size_t c : pair_choices_[p]) best = std::max(best, gain(choices_[c], uncovered));
      reachable += best;
    }
    if (reachable < need) return Outcome::kExhausted;

    std::size_t pivot = uncovered.find_first();
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t w = uncovered.find_first(); w != Bits::npos; w = uncovered.find_next(w)) {
      std::size_t live = 0;
      for (std::size_t c : covering_[w]) live += used_[choices_[c].pair] ? 0 : 1;
      if (live == 0) return Outcome::kExhausted;
      if (live < fewest) {
        fewest = live;
        pivot = w;
      }
    }

    for (std::size_t c : covering_[pivot]) {
      const std::size_t p = choices_[c].pair;
      if (used_[p]) continue;
      Bits rest = uncovered;
      for (Vertex w : choices_[c].covers) rest.reset(w);
      used_[p] = true;
      chosen_.push_back(c);
      const Outcome outcome = search(rest);
      if (outcome != Outcome::kExhausted) return outcome;
      chosen_.pop_back();
      used_[p] = false;
    }
    return Outcome::kExhausted;
  }

  std::vector<Choice> choices_;
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<std::vector<std::size_t>> pair_choices_;
  std::vector<bool> used_;
  std::vector<std::size_t> chosen_;
  std::uint64_t budget_;
  std::uint64_t local_nodes_ = 0;
  const Deadline& deadline_;
  SearchStats& stats_;
};

// Drops choices whose coverage is contained in another choice of the same
// pair; equal coverage keeps the lexicographically first path.
void prune_dominated(std::vector<Choice>& pair_choices) {
  constexpr std::size_t kMaxQuadratic = 512;
  if (pair_choices.size() > kMaxQuadratic) {
    std::stable_sort(pair_choices.begin(), pair_choices.end(),
                     [](const Choice& a, const Choice& b) { return a.covers < b.covers; });
    pair_choices.erase(std::unique(pair_choices.begin(), pair_choices.end(),
                                   [](const Choice& a, const Choice& b) {
                                     return a.covers == b.covers;
                                   }),
                       pair_choices.end());
    return;
  }
  std::vector<bool> drop(pair_choices.size(), false);
  for (std::size_t a = 0; a < pair_choices.size(); ++a) {
    for (std::size_t b = 0; b < pair_choices.size() && !drop[a]; ++b) {
      if (a == b || drop[b]) continue;
      const auto& ca = pair_choices[a].covers;
      const auto& cb = pair_choices[b].covers;
      if (!std::includes(cb.begin(), cb.end(), ca.begin(), ca.end())) continue;
      if (ca.size() < cb.size() || b < a) drop[a] = true;
    }
  }
  std::vector<Choice> kept;
  for (std::size_t a = 0; a < pair_choices.size(); ++a) {
    if (!drop[a]) kept.push_back(std::move(pair_choices[a]));
  }
  pair_choices = std::move(kept);
}

AssignmentResult assign(const Graph& g, const std::vector<Vertex>& set, GeodesicCache& cache,
                        const SolveLimits& limits, const Deadline& deadline) {
  AssignmentResult result;
  ++result.stats.subsets_tried;
  const std::size_t n = g.num_vertices();

  Bits uncovered(n);
  uncovered.set();
  for (Vertex s : set) uncovered.reset(s);
  result.witness.set = set;
  if (uncovered.none()) {
    result.status = CoverStatus::kCovered;
    return result;
  }

  std::vector<Edge> pairs;
  std::vector<Choice> choices;
  bool truncated = false;
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto& list = cache.get(set[i], set[j], result.stats);
      truncated = truncated || list.capped;
      std::vector<Choice> pair_choices;
      for (const auto& path : list.paths) {
        Choice c{pairs.size(), &path, {}};
        for (std::size_t k = 1; k + 1 < path.vertices.size(); ++k) {
          if (uncovered.test(path.vertices[k])) c.covers.push_back(path.vertices[k]);
        }
        if (c.covers.empty()) continue;
        std::sort(c.covers.begin(), c.covers.end());
        pair_choices.push_back(std::move(c));
      }
      pairs.emplace_back(set[i], set[j]);
      prune_dominated(pair_choices);
      for (auto& c : pair_choices) choices.push_back(std::move(c));
    }
  }

  CoverSearch search(n, pairs.size(), std::move(choices), limits.node_budget, deadline,
                     result.stats);
  switch (search.run(uncovered)) {
    case CoverSearch::Outcome::kFound: {
      result.status = CoverStatus::kCovered;
      for (std::size_t c : search.chosen()) {
        const auto& choice = search.choice(c);
        const auto [u, v] = pairs[choice.pair];
        result.witness.geodesics.push_back(PairGeodesic{u, v, *choice.path});
      }
      std::sort(result.witness.geodesics.begin(), result.witness.geodesics.end());
      break;
    }
    case CoverSearch::Outcome::kExhausted:
      result.status = truncated ? CoverStatus::kIndeterminate : CoverStatus::kNoCover;
      break;
    case CoverSearch::Outcome::kBudget:
      result.status = CoverStatus::kIndeterminate;
      break;
  }
  return result;
}

std::vector<Vertex> normalize_set(const Graph& g, std::vector<Vertex> set) {
  for (Vertex v : set) {
    if (!g.contains(v)) throw GraphError("set vertex " + std::to_string(v) + " is out of range");
  }
  std::sort(set.begin(), set.end());
  if (auto it = std::adjacent_find(set.begin(), set.end()); it != set.end()) {
    throw GraphError("set lists vertex " + std::to_string(*it) + " twice");
  }
  return set;
}

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

void SolveLimits::validate() const {
  if (geodesic_cap == 0) throw GraphError("geodesic cap must be positive");
  if (node_budget == 0) throw GraphError("node budget must be positive");
  if (time_budget && time_budget->count() <= 0) throw GraphError("time budget must be positive");
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes_expanded += other.nodes_expanded;
  pairs_enumerated += other.pairs_enumerated;
  geodesics_enumerated += other.geodesics_enumerated;
  subsets_tried += other.subsets_tried;
  return *this;
}

std::string to_string(CoverStatus status) {
  switch (status) {
    case CoverStatus::kCovered: return "covered";
    case CoverStatus::kNoCover: return "nocover";
    case CoverStatus::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

std::string to_string(SolveStatus status) {
  return status == SolveStatus::kOptimal ? "optimal" : "indeterminate";
}

Verdict verify_witness(const Graph& g, const CoverWitness& w) {
  const std::size_t n = g.num_vertices();
  Bits in_set(n);
  for (Vertex s : w.set) {
    if (!g.contains(s)) return {false, "set vertex " + std::to_string(s) + " is out of range", {}};
    if (in_set.test(s)) return {false, "set lists vertex " + std::to_string(s) + " twice", {}};
    in_set.set(s);
  }

  Bits covered = in_set;
  std::set<Edge> seen;
  for (const auto& pg : w.geodesics) {
    const Edge pair{pg.u, pg.v};
    if (!g.contains(pg.u) || !g.contains(pg.v)) {
      return {false, "pair " + pair_text(pg.u, pg.v) + " is out of range", pair};
    }
    if (pg.u == pg.v) return {false, "pair " + pair_text(pg.u, pg.v) + " repeats a vertex", pair};
    if (!in_set.test(pg.u) || !in_set.test(pg.v)) {
      return {false, "pair " + pair_text(pg.u, pg.v) + " is not drawn from the set", pair};
    }
    if (!seen.insert(std::minmax(pg.u, pg.v)).second) {
      return {false, "pair " + pair_text(pg.u, pg.v) + " is assigned more than once", pair};
    }
    const auto& vs = pg.path.vertices;
    if (vs.size() < 2) {
      return {false, "pair/path endpoint mismatch for " + pair_text(pg.u, pg.v), pair};
    }
    const bool forward = vs.front() == pg.u && vs.back() == pg.v;
    const bool backward = vs.front() == pg.v && vs.back() == pg.u;
    if (!forward && !backward) {
      return {false, "pair/path endpoint mismatch for " + pair_text(pg.u, pg.v), pair};
    }
    if (auto defect = geodesic_defect(g, pg.path); !defect.empty()) {
      return {false, "path for " + pair_text(pg.u, pg.v) + " is not a geodesic: " + defect, pair};
    }
    for (Vertex x : vs) covered.set(x);
  }

  if (!covered.all()) {
    Bits missing = ~covered;
    return {false, "vertex " + std::to_string(missing.find_first()) + " is not covered", {}};
  }
  return {true, {}, {}};
}

AssignmentResult find_assignment(const Graph& g, std::vector<Vertex> set,
                                 const SolveLimits& limits) {
  limits.validate();
  require_connected(g);
  set = normalize_set(g, std::move(set));
  GeodesicCache cache(g, limits.geodesic_cap);
  return assign(g, set, cache, limits, Deadline::from(limits));
}

std::size_t sg_lower_bound(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  if (n == 1) return 1;
  const auto interior = static_cast<std::size_t>(diameter(g) - 1);
  std::size_t k = 2;
  while (k + k * (k - 1) / 2 * interior < n) ++k;
  return std::max({simplicial_vertices(g).size(), std::size_t{2}, k});
}

SgResult strong_geodetic_number(const Graph& g, const SolveLimits& limits) {
  limits.validate();
  require_connected(g);
  const std::size_t n = g.num_vertices();
  SgResult result;
  if (n == 1) {
    result.status = SolveStatus::kOptimal;
    result.sg = result.lower_bound = 1;
    result.witness.set = {0};
    return result;
  }

  const auto forced = simplicial_vertices(g);
  std::vector<Vertex> optional;
  for (Vertex v = 0, f = 0; v < n; ++v) {
    if (f < forced.size() && forced[f] == v) {
      ++f;
    } else {
      optional.push_back(v);
    }
  }

  const Deadline deadline = Deadline::from(limits);
  GeodesicCache cache(g, limits.geodesic_cap);
  result.lower_bound = std::max(sg_lower_bound(g), forced.size());
  bool unresolved = false;  // some earlier candidate ended indeterminate

  for (std::size_t k = result.lower_bound; k <= n; ++k) {
    std::optional<AssignmentResult> hit;
    const bool out_of_time = detail::for_each_combination(
        optional.size(), k - forced.size(), [&](const std::vector<std::size_t>& idx) {
          if (deadline.passed()) return true;
          std::vector<Vertex> set = forced;
          for (std::size_t i : idx) set.push_back(optional[i]);
          std::sort(set.begin(), set.end());
          auto attempt = assign(g, set, cache, limits, deadline);
          result.stats += attempt.stats;
          if (attempt.status == CoverStatus::kCovered) {
            hit = std::move(attempt);
            return true;
          }
          if (attempt.status == CoverStatus::kIndeterminate) unresolved = true;
          return false;
        });
    if (hit) {
      result.sg = k;
      result.witness = std::move(hit->witness);
      result.status = unresolved ? SolveStatus::kIndeterminate : SolveStatus::kOptimal;
      if (!unresolved) result.lower_bound = k;
      return result;
    }
    if (out_of_time) break;
    if (!unresolved) result.lower_bound = k + 1;
  }

  // Out of time: the whole vertex set is always strong geodetic.
  result.status = SolveStatus::kIndeterminate;
  result.sg = n;
  result.witness.set.resize(n);
  for (Vertex v = 0; v < n; ++v) result.witness.set[v] = v;
  return result;
}

GeodeticResult geodetic_number(const Graph& g) {
  require_connected(g);
  const std::size_t n = g.num_vertices();
  if (n == 1) return {1, {0}};

  // interval[u * n + v] holds every vertex on some u,v-geodesic.
  const auto rows = all_pairs_distances(g);
  std::vector<Bits> interval(n * n, Bits(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int d = rows[u].dist[v];
      auto& bits = interval[u * n + v];
      for (Vertex w = 0; w < n; ++w) {
        if (rows[u].dist[w] + rows[v].dist[w] == d) bits.set(w);
      }
    }
  }

  const auto forced = simplicial_vertices(g);
  std::vector<Vertex> optional;
  for (Vertex v = 0; v < n; ++v) {
    if (!std::binary_search(forced.begin(), forced.end(), v)) optional.push_back(v);
  }

  for (std::size_t k = std::max<std::size_t>(2, forced.size()); k <= n; ++k) {
    std::vector<Vertex> found;
    detail::for_each_combination(
        optional.size(), k - forced.size(), [&](const std::vector<std::size_t>& idx) {
          std::vector<Vertex> set = forced;
          for (std::size_t i : idx) set.push_back(optional[i]);
          std::sort(set.begin(), set.end());
          Bits covered(n);
          for (std::size_t i = 0; i < set.size(); ++i) {
            covered.set(set[i]);
            for (std::size_t j = i + 1; j < set.size(); ++j) covered |= interval[set[i] * n + set[j]];
          }
          if (!covered.all()) return false;
          found = std::move(set);
          return true;
        });
    if (!found.empty()) return {k, std::move(found)};
  }
  throw InternalError("the full vertex set must be geodetic");
}

}  // namespace strongeo
