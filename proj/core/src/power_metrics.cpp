#include "powergraph/power_metrics.hpp"

#include <algorithm>

#include "powergraph/error.hpp"
#include "powergraph/parallel.hpp"
#include "powergraph/traversal.hpp"

namespace powergraph {

std::size_t power_degree(const Graph& g, Vertex v, unsigned r) {
  TruncatedBfs bfs(g);
  bfs.explore(v, r);
  return bfs.ball_degree();
}

std::vector<std::size_t> power_degrees(const Graph& g, unsigned r, unsigned workers) {
  std::vector<std::size_t> deg(g.num_vertices(), 0);
  parallel_chunks(g.num_vertices(), workers,
                  [&](unsigned, std::size_t begin, std::size_t end) {
                    TruncatedBfs bfs(g);
                    for (std::size_t v = begin; v < end; ++v) {
                      bfs.explore(static_cast<Vertex>(v), r);
                      deg[v] = bfs.ball_degree();
                    }
                  });
  return deg;
}

PowerDegreeSummary power_max_degree(const Graph& g, unsigned r, unsigned workers) {
  PowerDegreeSummary s;
  s.r = r;
  const auto deg = power_degrees(g, r, workers);
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (s.argmax == kNoVertex || deg[v] > s.delta) {
      s.delta = deg[v];
      s.argmax = static_cast<Vertex>(v);
    }
  }
  s.histogram.assign(s.delta + 1, 0);
  for (auto k : deg) ++s.histogram[k];
  if (deg.empty()) s.histogram.clear();
  return s;
}

VertexSet high_degree_set(const Graph& g, unsigned r, std::int64_t threshold,
                          unsigned workers) {
  if (threshold < 0) return VertexSet::all(g.num_vertices());
  const auto deg = power_degrees(g, r, workers);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] > static_cast<std::uint64_t>(threshold)) {
      out.push_back(static_cast<Vertex>(v));
    }
  }
  return VertexSet::from_sorted(std::move(out));
}

std::size_t clique_lower_bound(const Graph& g, unsigned r, unsigned workers) {
  if (g.num_vertices() == 0) return 0;
  const unsigned half = r / 2;
  if (half == 0) return g.num_edges() > 0 ? 2 : 1;
  return power_max_degree(g, half, workers).delta + 1;
}

namespace {

/// Sparse counter over vertex ids: counts plus the list of touched ids.
struct TouchCounter {
  std::vector<std::uint32_t> count;
  std::vector<Vertex> touched;

  explicit TouchCounter(std::size_t n) : count(n, 0) {}

  void add(Vertex w) {
    if (count[w]++ == 0) touched.push_back(w);
  }
  void reset() {
    for (Vertex w : touched) count[w] = 0;
    touched.clear();
  }
};

}  // namespace

CodegreeMax codegree_max(const Graph& g, unsigned r, unsigned workers) {
  const std::size_t n = g.num_vertices();
  std::vector<CodegreeMax> partial(std::max(1u, workers));
  parallel_chunks(n, workers, [&](unsigned w_id, std::size_t begin, std::size_t end) {
    TruncatedBfs bfs(g);
    TouchCounter counter(n);
    CodegreeMax best;
    for (std::size_t vi = begin; vi < end; ++vi) {
      const auto v = static_cast<Vertex>(vi);
      bfs.explore(v, r);
      for (unsigned i = 1; i <= r && i <= bfs.depth(); ++i) {
        for (Vertex u : bfs.layer(i)) {
          for (Vertex w : g.neighbors(u)) counter.add(w);
        }
        for (Vertex w : counter.touched) {
          const bool in_layer = bfs.reached(w) && bfs.distance(w) == i;
          if (w != v && !in_layer) {
            best.layer_codegree = std::max<std::size_t>(best.layer_codegree,
                                                        counter.count[w]);
          }
        }
        counter.reset();
      }
      for (Vertex u : bfs.order()) {
        if (u == v) continue;
        for (Vertex w : g.neighbors(u)) {
          if (w != v && bfs.reached(w)) counter.add(w);
        }
      }
      for (Vertex w : counter.touched) {
        best.power_codegree = std::max<std::size_t>(best.power_codegree,
                                                    counter.count[w]);
      }
      counter.reset();
    }
    partial[w_id] = best;
  });
  CodegreeMax out;
  for (const auto& p : partial) {
    out.layer_codegree = std::max(out.layer_codegree, p.layer_codegree);
    out.power_codegree = std::max(out.power_codegree, p.power_codegree);
  }
  return out;
}

std::uint64_t power_neighborhood_edge_count(const Graph& g, Vertex v, unsigned r,
                                            std::uint64_t edge_cap) {
  TruncatedBfs outer(g);
  outer.explore(v, r);
  const std::uint64_t k = outer.ball_degree();
  if (k * (k > 0 ? k - 1 : 0) / 2 > edge_cap) {
    throw MemoryBudgetError(k * (k - 1) / 2, edge_cap);
  }
  std::vector<char> member(g.num_vertices(), 0);
  for (Vertex u : outer.order()) {
    if (u != v) member[u] = 1;
  }
  std::uint64_t edges = 0;
  TruncatedBfs inner(g);
  for (Vertex u : outer.order()) {
    if (u == v) continue;
    inner.explore(u, r);
    for (Vertex w : inner.order()) {
      if (w > u && member[w]) ++edges;
    }
  }
  return edges;
}

VertexSet short_cycle_vertices(const Graph& g, unsigned t, unsigned max_t) {
  if (t > max_t) {
    throw BudgetExceeded("cycle length bound " + std::to_string(t) +
                             " exceeds configured maximum " + std::to_string(max_t),
                         0, g.num_vertices());
  }
  const std::size_t n = g.num_vertices();
  std::vector<char> on_cycle(n, 0);
  if (t < 3) return {};
  // Edge uv lies on a cycle of length <= t iff dist(u, v) <= t - 1 in G - uv;
  // a vertex lies on such a cycle iff one of its edges does.
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<unsigned> dist(n, 0);
  std::vector<Vertex> queue;
  std::uint32_t epoch = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) < 2) continue;
    for (Vertex v : g.neighbors(u)) {
      if (v < u || g.degree(v) < 2) continue;
      if (on_cycle[u] && on_cycle[v]) continue;
      ++epoch;
      queue.assign(1, u);
      stamp[u] = epoch;
      dist[u] = 0;
      bool found = false;
      for (std::size_t head = 0; head < queue.size() && !found; ++head) {
        const Vertex x = queue[head];
        if (dist[x] + 1 > t - 1) break;
        for (Vertex y : g.neighbors(x)) {
          if (x == u && y == v) continue;  // the removed edge
          if (stamp[y] == epoch) continue;
          if (y == v) {
            found = true;
            break;
          }
          stamp[y] = epoch;
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
      if (found) on_cycle[u] = on_cycle[v] = 1;
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (on_cycle[v]) out.push_back(v);
  }
  return VertexSet::from_sorted(std::move(out));
}

std::size_t short_cycle_proximity(const Graph& g, unsigned s, unsigned t,
                                  unsigned max_t) {
  const VertexSet cyc = short_cycle_vertices(g, t, max_t);
  if (cyc.empty()) return 0;
  TruncatedBfs bfs(g);
  bfs.explore(cyc.span(), s);
  return bfs.order().size();
}

}  // namespace powergraph
