#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "powergraph/degree_profile.hpp"
#include "powergraph/graph.hpp"

namespace powergraph {

/// Reusable depth-limited BFS over one graph.
///
/// Membership is tracked with epoch stamps, so a search costs time
/// proportional to the explored ball rather than to n. One instance per
/// thread.
class TruncatedBfs {
 public:
  explicit TruncatedBfs(const Graph& g);

  /// Explores every vertex at distance <= radius from `source`. Afterwards
  /// order() lists them in BFS order (source first, neighbors in index order)
  /// and layer(t) is the slice at distance exactly t.
  void explore(Vertex source, unsigned radius);

  /// Same, from several sources at distance 0.
  void explore(std::span<const Vertex> sources, unsigned radius);

  std::span<const Vertex> order() const noexcept { return order_; }
  std::span<const Vertex> layer(unsigned t) const noexcept;
  /// Number of layers reached, including layer 0.
  unsigned depth() const noexcept {
    return static_cast<unsigned>(layer_begin_.size()) - 1;
  }

  bool reached(Vertex v) const noexcept { return stamp_[v] == epoch_; }
  /// Valid only when reached(v).
  unsigned distance(Vertex v) const noexcept { return dist_[v]; }

  /// |ball| - 1 for the last single-source search.
  std::size_t ball_degree() const noexcept { return order_.size() - 1; }

  const Graph& graph() const noexcept { return *g_; }

 private:
  void next_epoch();
  void run(unsigned radius);

  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::vector<unsigned> dist_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> layer_begin_;  // one past last entry is order_.size()
  std::uint32_t epoch_ = 0;
};

/// (|N_1(v)|, ..., |N_r(v)|) where N_t is the set at distance exactly t.
DegreeProfile bfs_layers(const Graph& g, Vertex v, unsigned r);

/// All u with dist(v, u) <= r, v included.
VertexSet ball(const Graph& g, Vertex v, unsigned r);

enum class Closure { Closed, Open };

/// Closed: union of ball(v, r) over v in s, i.e. S u N_r(S).
/// Open: union of ball(v, r) \ {v}; a member of S appears only when it lies
/// within distance r of another member.
VertexSet neighborhood_union(const Graph& g, const VertexSet& s, unsigned r,
                             Closure closure = Closure::Closed);

/// Connected component label per vertex (labels in order of smallest member)
/// and the number of components.
struct Components {
  std::vector<Vertex> label;
  std::size_t count = 0;
};
Components connected_components(const Graph& g);

}  // namespace powergraph
