#pragma once

#include <cstddef>
#include <cstdint>

#include "powergraph/graph.hpp"

namespace powergraph {

inline constexpr std::uint64_t kDefaultCliqueBudget = 50'000'000;

/// A maximum clique found by branch and bound with greedy-coloring bounds.
/// Throws BudgetExceeded (lower = best clique so far, upper = coloring bound)
/// once more than `node_budget` search nodes are expanded.
VertexSet maximum_clique(const Graph& g,
                         std::uint64_t node_budget = kDefaultCliqueBudget);

/// omega(g).
std::size_t max_clique_exact(const Graph& g,
                             std::uint64_t node_budget = kDefaultCliqueBudget);

enum class IndependenceMode { Exact, Greedy };

/// Exact: clique search on the implicit complement (bitset rows are negated,
/// the complement graph is never built). Greedy: min-degree greedy, a valid
/// lower bound that never fails.
std::size_t independence_number(const Graph& g, IndependenceMode mode,
                                 std::uint64_t node_budget = kDefaultCliqueBudget);

/// The set picked by the min-degree greedy rule (repeatedly take a vertex of
/// minimum remaining degree, smallest index on ties, and delete its closed
/// neighborhood).
VertexSet greedy_independent_set(const Graph& g);

}  // namespace powergraph
