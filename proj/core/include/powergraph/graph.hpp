#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace powergraph {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted list of distinct vertex indices.
class VertexSet {
 public:
  VertexSet() = default;

  /// Sorts and deduplicates.
  static VertexSet from_unsorted(std::vector<Vertex> vertices);
  /// Caller guarantees strictly increasing order.
  static VertexSet from_sorted(std::vector<Vertex> vertices);
  static VertexSet all(std::size_t n);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(Vertex v) const noexcept;

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }
  Vertex operator[](std::size_t i) const noexcept { return items_[i]; }

  std::span<const Vertex> span() const noexcept { return items_; }
  const std::vector<Vertex>& vector() const noexcept { return items_; }

  /// All indices < n.
  bool within(std::size_t n) const noexcept {
    return items_.empty() || items_.back() < n;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> items_;
};

/// Immutable simple undirected graph in compressed row form.
///
/// Every adjacency list is strictly increasing, contains no self-loop and
/// the relation is symmetric. Safe to share between threads.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from an edge list. Duplicates and reversed copies collapse to one
  /// edge; self-loops and out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Adopts an already-canonical CSR layout (symmetric, strictly sorted rows,
  /// no loops). Validated only in debug builds.
  static Graph from_csr(std::vector<std::size_t> offsets,
                        std::vector<Vertex> adjacency);

  std::size_t num_vertices() const noexcept { return offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  bool has_edge(Vertex u, Vertex v) const noexcept;

  std::size_t max_degree() const noexcept;

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  /// Checks every structural invariant; used by tests and debug builds.
  bool is_canonical() const noexcept;

  const std::vector<std::size_t>& offsets() const noexcept { return offsets_; }
  const std::vector<Vertex>& adjacency() const noexcept { return adjacency_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(std::vector<std::size_t> offsets, std::vector<Vertex> adjacency)
      : offsets_(std::move(offsets)), adjacency_(std::move(adjacency)) {}

  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

}  // namespace powergraph
