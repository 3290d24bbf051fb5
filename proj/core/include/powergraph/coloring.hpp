#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "powergraph/graph.hpp"

namespace powergraph {

using Color = std::uint32_t;

/// Vertex coloring together with the radius r it is meant to be proper for
/// (a coloring of G^r).
struct Coloring {
  std::vector<Color> colors;
  std::size_t palette_size = 0;  // 1 + max color, 0 for the empty graph
  unsigned radius = 1;

  static Coloring from_colors(std::vector<Color> colors, unsigned radius);

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// First-fit coloring of G^r in the given order: each vertex takes the
/// smallest color absent from its already-colored ball of radius r. The order
/// must be a permutation of the vertices (std::invalid_argument otherwise).
Coloring greedy_power_coloring(const Graph& g, unsigned r,
                               std::span<const Vertex> order);
Coloring greedy_power_coloring(const Graph& g, unsigned r);  // index order

/// DSATUR coloring of an explicit graph (heuristic, no backtracking).
Coloring dsatur_coloring(const Graph& g);

inline constexpr std::uint64_t kDefaultChromaticBudget = 20'000'000;

struct ChromaticResult {
  std::size_t chi = 0;
  Coloring witness;
};

/// Exact chromatic number of an explicit graph by DSATUR branch and bound.
/// Seeded with a maximum-clique lower bound (clique vertices precolored) and
/// the DSATUR heuristic upper bound. Throws BudgetExceeded carrying the best
/// bounds once `node_budget` nodes are expanded.
ChromaticResult dsatur_chromatic_exact(
    const Graph& g_power, std::uint64_t node_budget = kDefaultChromaticBudget);

/// Coloring of G^r with at most Delta(G^{r-1}) + 1 colors, valid whenever
/// G[S u N_r(S)] is a forest, where S is the set of vertices whose G^r-degree
/// exceeds Delta(G^{r-1}):
///  1. color S tree by tree (root = smallest vertex, BFS order), each vertex
///     taking the smallest color unused within G-distance r;
///  2. color the rest first-fit in index order.
/// Requires r >= 2 (std::invalid_argument). Throws ForestViolation with a
/// cycle of G[S u N_r(S)] when the forest condition fails.
Coloring two_phase_power_coloring(const Graph& g, unsigned r);

struct ColoringCheck {
  bool proper = true;
  /// First conflicting pair (smallest u, then smallest v > u) when improper.
  std::optional<std::pair<Vertex, Vertex>> conflict;
};

/// Properness in G^r checked by truncated BFS. Also flags a coloring whose
/// size does not match the graph (conflict left empty).
ColoringCheck verify_proper_power_coloring(const Graph& g, unsigned r,
                                           const Coloring& c,
                                           unsigned workers = 1);

// Text format: "s <palette_size> <r>" then "c <vertex> <color>" per vertex
// (0-indexed).
void write_coloring(std::ostream& out, const Coloring& c);
Coloring read_coloring(std::istream& in);

// DIMACS-style solution: "s col <k>" then "l <vertex> <color>" with 1-indexed
// vertices and colors.
void write_dimacs_solution(std::ostream& out, const Coloring& c);
Coloring read_dimacs_solution(std::istream& in, unsigned radius = 1);

}  // namespace powergraph
