#pragma once

#include <cstddef>
#include <cstdint>

#include "powergraph/graph.hpp"
#include "powergraph/graph_ops.hpp"

namespace powergraph {

/// A quantity known either exactly or only between two bounds.
struct Bounded {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;

  std::size_t value() const noexcept { return exact ? lower : upper; }
};

struct GapBudgets {
  std::uint64_t clique_nodes = 5'000'000;
  std::uint64_t independence_nodes = 5'000'000;
  std::uint64_t chromatic_nodes = 5'000'000;
  std::uint64_t edge_cap = kDefaultEdgeCap;
};

/// omega, alpha and chi of G^r and the ratio chi / max(omega, n / alpha).
/// Budget overruns never throw; they leave the quantity inexact with bounds.
struct GapReport {
  unsigned r = 0;
  std::size_t n = 0;
  Bounded omega;
  Bounded alpha;
  Bounded chi;
  /// Computed from chi.upper, omega.lower and alpha.upper when inexact, so
  /// it is an upper estimate in that case.
  double ratio = 0;
  bool all_exact = false;
};

GapReport conjecture_gap(const Graph& g, unsigned r, const GapBudgets& budgets = {});

}  // namespace powergraph
