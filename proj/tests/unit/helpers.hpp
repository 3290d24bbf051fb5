#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "powergraph/generators.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/random.hpp"

namespace testutil {

inline powergraph::Graph make(std::size_t n,
                              std::initializer_list<std::pair<unsigned, unsigned>> es) {
  std::vector<powergraph::Edge> edges;
  for (auto [u, v] : es) edges.push_back({u, v});
  return powergraph::Graph::from_edges(n, edges);
}

inline powergraph::Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  powergraph::RandomSource src(seed);
  return powergraph::gnp_sample(n, p, src);
}

/// Disjoint union of two graphs, b's vertices shifted by a.num_vertices().
inline powergraph::Graph disjoint_union(const powergraph::Graph& a,
                                        const powergraph::Graph& b) {
  std::vector<powergraph::Edge> edges = a.edges();
  const auto shift = static_cast<powergraph::Vertex>(a.num_vertices());
  for (auto e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return powergraph::Graph::from_edges(a.num_vertices() + b.num_vertices(), edges);
}

inline std::vector<powergraph::Vertex> vs(std::initializer_list<powergraph::Vertex> x) {
  return std::vector<powergraph::Vertex>(x);
}

}  // namespace testutil
