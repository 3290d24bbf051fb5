#include "powergraph/graph_ops.hpp"

#include <algorithm>
#include <numeric>

#include "powergraph/error.hpp"
#include "powergraph/traversal.hpp"

namespace powergraph {

namespace {

/// Rows of G^r restricted to `members` (all vertices when empty), built by
/// one truncated BFS per member. `index` maps old -> new (kNoVertex outside).
Graph power_rows(const Graph& g, unsigned r, std::span<const Vertex> members,
                 const std::vector<Vertex>* index, std::uint64_t edge_cap) {
  const std::size_t k = members.size();
  std::vector<std::size_t> offsets(k + 1, 0);
  std::vector<Vertex> adjacency;
  TruncatedBfs bfs(g);
  std::vector<Vertex> row;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = members[i];
    bfs.explore(v, r);
    row.clear();
    for (Vertex u : bfs.order()) {
      if (u == v) continue;
      if (index == nullptr) {
        row.push_back(u);
      } else if ((*index)[u] != kNoVertex) {
        row.push_back((*index)[u]);
      }
    }
    std::sort(row.begin(), row.end());
    if ((adjacency.size() + row.size()) / 2 > edge_cap) {
      // Lower bound on the final size: what is stored plus this row.
      throw MemoryBudgetError((adjacency.size() + row.size()) / 2, edge_cap);
    }
    adjacency.insert(adjacency.end(), row.begin(), row.end());
    offsets[i + 1] = adjacency.size();
  }
  return Graph::from_csr(std::move(offsets), std::move(adjacency));
}

}  // namespace

Graph graph_power(const Graph& g, unsigned r, std::uint64_t edge_cap) {
  if (r == 0) throw std::invalid_argument("graph_power needs r >= 1");
  if (r == 1) {
    if (g.num_edges() > edge_cap) throw MemoryBudgetError(g.num_edges(), edge_cap);
    return g;
  }
  const VertexSet all = VertexSet::all(g.num_vertices());
  return power_rows(g, r, all.span(), nullptr, edge_cap);
}

Graph induced_power_subgraph(const Graph& g, unsigned r, const VertexSet& s,
                             std::uint64_t edge_cap) {
  if (r == 0) throw std::invalid_argument("induced_power_subgraph needs r >= 1");
  std::vector<Vertex> index(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<Vertex>(i);
  return power_rows(g, r, s.span(), &index, edge_cap);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.old_to_new.assign(g.num_vertices(), kNoVertex);
  out.new_to_old = s.vector();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.old_to_new[s[i]] = static_cast<Vertex>(i);
  }
  std::vector<std::size_t> offsets(s.size() + 1, 0);
  std::vector<Vertex> adjacency;
  for (std::size_t i = 0; i < s.size(); ++i) {
    // Neighbors are sorted and the map is monotone, so rows stay sorted.
    for (Vertex w : g.neighbors(s[i])) {
      if (out.old_to_new[w] != kNoVertex) adjacency.push_back(out.old_to_new[w]);
    }
    offsets[i + 1] = adjacency.size();
  }
  out.graph = Graph::from_csr(std::move(offsets), std::move(adjacency));
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> offsets(n + 1, 0);
  std::vector<Vertex> adjacency;
  adjacency.reserve(n * (n > 0 ? n - 1 : 0) - 2 * g.num_edges());
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    auto it = nb.begin();
    for (Vertex u = 0; u < n; ++u) {
      while (it != nb.end() && *it < u) ++it;
      if (u == v || (it != nb.end() && *it == u)) continue;
      adjacency.push_back(u);
    }
    offsets[v + 1] = adjacency.size();
  }
  return Graph::from_csr(std::move(offsets), std::move(adjacency));
}

namespace {

struct DisjointSets {
  std::vector<Vertex> parent;

  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
  }
  Vertex find(Vertex x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent[a] = b;
    return true;
  }
};

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

}  // namespace

ForestCheck is_forest(const Graph& g) {
  const std::size_t n = g.num_vertices();
  DisjointSets sets(n);
  std::vector<std::vector<Vertex>> tree(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      if (sets.unite(u, v)) {
        tree[u].push_back(v);
        tree[v].push_back(u);
        continue;
      }
      // (u, v) closes a cycle: the tree path v -> u plus this edge.
      std::vector<Vertex> parent(n, kNoVertex);
      std::vector<Vertex> queue{v};
      parent[v] = v;
      for (std::size_t head = 0; head < queue.size() && parent[u] == kNoVertex; ++head) {
        for (Vertex w : tree[queue[head]]) {
          if (parent[w] == kNoVertex) {
            parent[w] = queue[head];
            queue.push_back(w);
          }
        }
      }
      std::vector<Vertex> cycle;
      for (Vertex x = u; x != v; x = parent[x]) cycle.push_back(x);
      cycle.push_back(v);
      return {false, canonical_cycle(std::move(cycle))};
    }
  }
  return {true, {}};
}

}  // namespace powergraph
