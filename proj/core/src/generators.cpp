#include "powergraph/generators.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace powergraph {

SamplingMode resolve_sampling_mode(std::size_t n, SamplingMode mode) noexcept {
  if (mode != SamplingMode::Auto) return mode;
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  return pairs <= kPairwiseLimit ? SamplingMode::Pairwise
                                 : SamplingMode::GeometricSkip;
}

const char* to_string(SamplingMode mode) noexcept {
  switch (mode) {
    case SamplingMode::Pairwise:
      return "pairwise";
    case SamplingMode::GeometricSkip:
      return "skip";
    case SamplingMode::Auto:
      break;
  }
  return "auto";
}

namespace {

std::vector<Edge> sample_pairwise(std::size_t n, double p, RandomSource& src) {
  std::vector<Edge> edges;
  const double expected = p * static_cast<double>(n) * static_cast<double>(n) / 2;
  edges.reserve(static_cast<std::size_t>(expected * 1.1) + 16);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (src.uniform01() < p) edges.push_back({i, j});
    }
  }
  return edges;
}

std::vector<Edge> sample_skip(std::size_t n, double p, RandomSource& src) {
  std::vector<Edge> edges;
  if (n < 2 || p <= 0.0) return edges;
  const double expected = p * static_cast<double>(n) * static_cast<double>(n) / 2;
  edges.reserve(static_cast<std::size_t>(expected * 1.1) + 16);
  if (p >= 1.0) return sample_pairwise(n, p, src);
  const double log_q = std::log1p(-p);
  // Cursor (i, j) walks pairs i < j lexicographically; row i holds
  // columns i+1 .. n-1.
  std::uint64_t i = 0;
  std::uint64_t j = 0;  // row i's candidates start at column i + 1
  const std::uint64_t nn = n;
  for (;;) {
    const double u = 1.0 - src.uniform01();  // (0, 1]
    const double skip_real = std::floor(std::log(u) / log_q);
    const std::uint64_t skip =
        skip_real >= 0x1.0p62 ? std::uint64_t{1} << 62
                              : static_cast<std::uint64_t>(skip_real);
    std::uint64_t advance = skip + 1;
    // Move `advance` columns forward, wrapping into later rows.
    while (advance > 0) {
      const std::uint64_t room = nn - 1 - j;  // columns left in row i
      if (advance <= room) {
        j += advance;
        advance = 0;
      } else {
        advance -= room;
        ++i;
        if (i + 1 >= nn) return edges;
        j = i;
      }
    }
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
}

}  // namespace

Graph gnp_sample(std::size_t n, double p, RandomSource& src, SamplingMode mode) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  const auto edges = resolve_sampling_mode(n, mode) == SamplingMode::Pairwise
                         ? sample_pairwise(n, p, src)
                         : sample_skip(n, p, src);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  }
  return Graph::from_edges(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph::from_edges(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

Graph empty_graph(std::size_t n) { return Graph::from_edges(n, {}); }

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, static_cast<Vertex>((i + 1) % 5)});          // outer 5-cycle
    e.push_back({i, static_cast<Vertex>(i + 5)});                // spokes
    e.push_back({static_cast<Vertex>(i + 5),
                 static_cast<Vertex>((i + 2) % 5 + 5)});         // inner pentagram
  }
  return Graph::from_edges(10, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<Vertex>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::from_edges(rows * cols, e);
}

Graph random_tree(std::size_t n, RandomSource& src) {
  if (n <= 1) return empty_graph(n);
  if (n == 2) return path_graph(2);
  std::vector<Vertex> prufer(n - 2);
  for (auto& x : prufer) x = static_cast<Vertex>(src.next_u64() % n);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : prufer) ++degree[x];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> e;
  for (Vertex x : prufer) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    e.push_back({leaf, x});
    if (--degree[x] == 1) leaves.push(x);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  const Vertex b = leaves.top();
  e.push_back({a, b});
  return Graph::from_edges(n, e);
}

}  // namespace powergraph
