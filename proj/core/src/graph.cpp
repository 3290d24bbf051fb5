#include "powergraph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "powergraph/degree_profile.hpp"
#include "powergraph/error.hpp"

namespace powergraph {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MemoryBudget: return "MEMORY_BUDGET";
    case ErrorCode::BudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::ForestViolation: return "FOREST_VIOLATION";
    case ErrorCode::Domain: return "DOMAIN";
    case ErrorCode::NoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::Config: return "CONFIG";
    case ErrorCode::Io: return "IO";
  }
  return "UNKNOWN";
}

MemoryBudgetError::MemoryBudgetError(std::uint64_t requested, std::uint64_t cap)
    : Error(ErrorCode::MemoryBudget,
            "explicit graph would need " + std::to_string(requested) +
                " edges, cap is " + std::to_string(cap)),
      requested(requested),
      cap(cap) {}

ForestViolation::ForestViolation(std::vector<std::uint32_t> cycle)
    : Error(ErrorCode::ForestViolation,
            "forest condition fails: cycle of length " +
                std::to_string(cycle.size())),
      cycle(std::move(cycle)) {}

VertexSet VertexSet::from_unsorted(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  VertexSet s;
  s.items_ = std::move(vertices);
  return s;
}

VertexSet VertexSet::from_sorted(std::vector<Vertex> vertices) {
  assert(std::adjacent_find(vertices.begin(), vertices.end(),
                            std::greater_equal<>{}) == vertices.end());
  VertexSet s;
  s.items_ = std::move(vertices);
  return s;
}

VertexSet VertexSet::all(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return from_sorted(std::move(v));
}

bool VertexSet::contains(Vertex v) const noexcept {
  return std::binary_search(items_.begin(), items_.end(), v);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n >= kNoVertex) throw std::invalid_argument("vertex count too large");
  std::vector<std::size_t> degree(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") out of range for n = " +
                                  std::to_string(n));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    }
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] = offsets[v] + degree[v];
  std::vector<Vertex> adjacency(offsets[n]);
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    adjacency[fill[e.u]++] = e.v;
    adjacency[fill[e.v]++] = e.u;
  }
  // Sort rows and drop duplicates, compacting in place.
  std::size_t write = 0;
  std::vector<std::size_t> compact(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v]);
    auto last = adjacency.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    compact[v] = write;
    for (auto it = first; it != last; ++it) adjacency[write++] = *it;
  }
  compact[n] = write;
  adjacency.resize(write);
  adjacency.shrink_to_fit();
  return Graph(std::move(compact), std::move(adjacency));
}

Graph Graph::from_csr(std::vector<std::size_t> offsets,
                      std::vector<Vertex> adjacency) {
  Graph g(std::move(offsets), std::move(adjacency));
  assert(g.is_canonical());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < num_vertices(); ++v) {
    best = std::max(best, degree(static_cast<Vertex>(v)));
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::is_canonical() const noexcept {
  if (offsets_.empty() || offsets_.front() != 0) return false;
  if (offsets_.back() != adjacency_.size()) return false;
  if (adjacency_.size() % 2 != 0) return false;
  const std::size_t n = num_vertices();
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets_[v] > offsets_[v + 1]) return false;
    auto nb = neighbors(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= n || nb[i] == v) return false;
      if (i > 0 && nb[i - 1] >= nb[i]) return false;
      auto back = neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), static_cast<Vertex>(v))) {
        return false;
      }
    }
  }
  return true;
}

std::uint64_t DegreeProfile::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto l : ell) sum += l;
  return sum;
}

double DegreeProfile::product() const noexcept {
  double prod = 1.0;
  for (auto l : ell) {
    if (l > 0) prod *= static_cast<double>(l);
  }
  return prod;
}

bool DegreeProfile::feasible() const noexcept {
  bool seen_zero = false;
  for (auto l : ell) {
    if (l == 0) {
      seen_zero = true;
    } else if (seen_zero) {
      return false;
    }
  }
  return true;
}

}  // namespace powergraph
