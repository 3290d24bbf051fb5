#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/graph_ops.hpp"

namespace powergraph {

// Statistics of G^r computed by truncated BFS, without materializing G^r.

struct PowerDegreeSummary {
  unsigned r = 0;
  std::size_t delta = 0;      // max degree of G^r
  Vertex argmax = kNoVertex;  // smallest vertex attaining delta
  /// histogram[k] = number of vertices of G^r-degree k; size delta + 1.
  std::vector<std::size_t> histogram;
};

std::size_t power_degree(const Graph& g, Vertex v, unsigned r);

/// Exact Delta(G^r). Vertices are split across `workers` threads; ties go to
/// the smallest index regardless of the worker count.
PowerDegreeSummary power_max_degree(const Graph& g, unsigned r,
                                    unsigned workers = 1);

/// G^r-degree of every vertex.
std::vector<std::size_t> power_degrees(const Graph& g, unsigned r,
                                       unsigned workers = 1);

/// { v : power_degree(v, r) > threshold }. A negative threshold selects all
/// vertices.
VertexSet high_degree_set(const Graph& g, unsigned r, std::int64_t threshold,
                          unsigned workers = 1);

/// Size of the largest ball of radius floor(r/2), i.e.
/// Delta(G^{floor(r/2)}) + 1, which is a clique in G^r. For r = 1 this is 2
/// when g has an edge and 1 otherwise.
std::size_t clique_lower_bound(const Graph& g, unsigned r, unsigned workers = 1);

struct CodegreeMax {
  /// max over v, 1 <= i <= r, w outside N_i(v) u {v} of #G-edges from w
  /// into N_i(v) (N_i = distance exactly i).
  std::size_t layer_codegree = 0;
  /// max over v, w in N(v) = ball(v, r) \ {v} of #G-edges from w into N(v).
  std::size_t power_codegree = 0;
};

CodegreeMax codegree_max(const Graph& g, unsigned r, unsigned workers = 1);

/// Number of G^r edges with both endpoints in ball(v, r) \ {v}. Throws
/// MemoryBudgetError when the ball holds more than `edge_cap` pairs.
std::uint64_t power_neighborhood_edge_count(const Graph& g, Vertex v, unsigned r,
                                            std::uint64_t edge_cap = kDefaultEdgeCap);

inline constexpr unsigned kDefaultMaxCycleLength = 16;

/// Z_{s,t}: vertices within distance s of a cycle of length <= t. Throws
/// BudgetExceeded when t > max_t. t < 3 gives 0.
std::size_t short_cycle_proximity(const Graph& g, unsigned s, unsigned t,
                                  unsigned max_t = kDefaultMaxCycleLength);

/// Vertices lying on at least one cycle of length <= t.
VertexSet short_cycle_vertices(const Graph& g, unsigned t,
                               unsigned max_t = kDefaultMaxCycleLength);

}  // namespace powergraph
