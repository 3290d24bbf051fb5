#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "powergraph/graph.hpp"

namespace powergraph {

inline constexpr std::uint64_t kDefaultEdgeCap = 100'000'000;

/// G^r: u ~ v iff 1 <= dist_G(u, v) <= r. Throws MemoryBudgetError once the
/// edge count would pass `edge_cap`. graph_power(g, 1) == g.
Graph graph_power(const Graph& g, unsigned r,
                  std::uint64_t edge_cap = kDefaultEdgeCap);

/// G^r restricted to `s`, with distances measured in all of G (not in G[s]).
/// Vertex i of the result is s[i].
Graph induced_power_subgraph(const Graph& g, unsigned r, const VertexSet& s,
                             std::uint64_t edge_cap = kDefaultEdgeCap);

struct InducedSubgraph {
  Graph graph;
  /// old index -> new index, kNoVertex when not in the set.
  std::vector<Vertex> old_to_new;
  /// new index -> old index (the set itself).
  std::vector<Vertex> new_to_old;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Complement graph (no loops). Quadratic; meant for small n.
Graph complement(const Graph& g);

struct ForestCheck {
  bool is_forest = true;
  /// One cycle when !is_forest: starts at its smallest vertex and continues
  /// towards the smaller of that vertex's two cycle neighbors.
  std::vector<Vertex> cycle;
};

ForestCheck is_forest(const Graph& g);

}  // namespace powergraph
