#include "powergraph/traversal.hpp"

#include <algorithm>

namespace powergraph {

TruncatedBfs::TruncatedBfs(const Graph& g)
    : g_(&g), stamp_(g.num_vertices(), 0), dist_(g.num_vertices(), 0) {
  order_.reserve(64);
  layer_begin_.reserve(16);
}

void TruncatedBfs::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

void TruncatedBfs::explore(Vertex source, unsigned radius) {
  next_epoch();
  order_.clear();
  layer_begin_.clear();
  stamp_[source] = epoch_;
  dist_[source] = 0;
  order_.push_back(source);
  run(radius);
}

void TruncatedBfs::explore(std::span<const Vertex> sources, unsigned radius) {
  next_epoch();
  order_.clear();
  layer_begin_.clear();
  for (Vertex s : sources) {
    if (stamp_[s] == epoch_) continue;
    stamp_[s] = epoch_;
    dist_[s] = 0;
    order_.push_back(s);
  }
  run(radius);
}

void TruncatedBfs::run(unsigned radius) {
  layer_begin_.push_back(0);
  std::size_t head = 0;
  for (unsigned depth = 0; depth < radius; ++depth) {
    const std::size_t layer_end = order_.size();
    if (head == layer_end) break;
    layer_begin_.push_back(layer_end);
    for (; head < layer_end; ++head) {
      for (Vertex w : g_->neighbors(order_[head])) {
        if (stamp_[w] == epoch_) continue;
        stamp_[w] = epoch_;
        dist_[w] = depth + 1;
        order_.push_back(w);
      }
    }
    if (order_.size() == layer_end) {
      layer_begin_.pop_back();
      break;
    }
  }
}

std::span<const Vertex> TruncatedBfs::layer(unsigned t) const noexcept {
  if (t >= layer_begin_.size()) return {};
  const std::size_t begin = layer_begin_[t];
  const std::size_t end =
      t + 1 < layer_begin_.size() ? layer_begin_[t + 1] : order_.size();
  return {order_.data() + begin, end - begin};
}

DegreeProfile bfs_layers(const Graph& g, Vertex v, unsigned r) {
  TruncatedBfs bfs(g);
  bfs.explore(v, r);
  DegreeProfile profile;
  profile.ell.resize(r, 0);
  for (unsigned t = 1; t <= r; ++t) profile.ell[t - 1] = bfs.layer(t).size();
  return profile;
}

VertexSet ball(const Graph& g, Vertex v, unsigned r) {
  TruncatedBfs bfs(g);
  bfs.explore(v, r);
  return VertexSet::from_unsorted({bfs.order().begin(), bfs.order().end()});
}

VertexSet neighborhood_union(const Graph& g, const VertexSet& s, unsigned r,
                             Closure closure) {
  if (s.empty()) return {};
  if (closure == Closure::Closed) {
    TruncatedBfs bfs(g);
    bfs.explore(s.span(), r);
    return VertexSet::from_unsorted({bfs.order().begin(), bfs.order().end()});
  }
  // Open union: a center v belongs only if some other center is within r.
  TruncatedBfs multi(g);
  multi.explore(s.span(), r);
  std::vector<Vertex> out;
  out.reserve(multi.order().size());
  for (Vertex u : multi.order()) {
    if (!s.contains(u)) out.push_back(u);
  }
  TruncatedBfs single(g);
  for (Vertex v : s) {
    single.explore(v, r);
    for (Vertex u : single.order()) {
      if (u != v && s.contains(u)) out.push_back(u);
    }
  }
  return VertexSet::from_unsorted(std::move(out));
}

Components connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Components c;
  c.label.assign(n, kNoVertex);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (c.label[s] != kNoVertex) continue;
    const auto id = static_cast<Vertex>(c.count++);
    c.label[s] = id;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (Vertex w : g.neighbors(queue[head])) {
        if (c.label[w] == kNoVertex) {
          c.label[w] = id;
          queue.push_back(w);
        }
      }
    }
  }
  return c;
}

}  // namespace powergraph
