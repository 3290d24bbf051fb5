#include "powergraph/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/error.hpp"

namespace powergraph {

namespace {

using Word = std::uint64_t;

/// Branch and bound over bitsets (MCQ-style color sort). Vertices are
/// renumbered by non-increasing degree so low bit positions are tried first
/// by the coloring bound.
class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, bool complement, std::uint64_t budget)
      : n_(g.num_vertices()), words_((n_ + 63) / 64), budget_(budget) {
    std::vector<std::size_t> deg(n_);
    for (Vertex v = 0; v < n_; ++v) {
      deg[v] = complement ? n_ - 1 - g.degree(v) : g.degree(v);
    }
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    std::vector<Vertex> rank(n_);
    for (std::size_t i = 0; i < n_; ++i) rank[order_[i]] = static_cast<Vertex>(i);

    rows_.assign(n_ * words_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      Word* row = rows_.data() + rank[v] * words_;
      for (Vertex u : g.neighbors(v)) set_bit(row, rank[u]);
    }
    if (complement) {
      for (std::size_t i = 0; i < n_; ++i) {
        Word* row = rows_.data() + i * words_;
        for (std::size_t w = 0; w < words_; ++w) row[w] = ~row[w];
        clear_bit(row, i);
        trim(row);
      }
    }
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    std::vector<Word> all(words_, ~Word{0});
    trim(all.data());
    {
      std::vector<std::size_t> order;
      std::vector<std::size_t> bounds;
      color_sort(all, order, bounds);
      initial_upper_ = bounds.empty() ? 0 : bounds.back();
    }
    best_.assign(1, 0);  // any single vertex is a clique
    expand(all);
    std::vector<Vertex> out;
    out.reserve(best_.size());
    for (auto i : best_) out.push_back(order_[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  static void set_bit(Word* row, std::size_t i) { row[i / 64] |= Word{1} << (i % 64); }
  static void clear_bit(Word* row, std::size_t i) { row[i / 64] &= ~(Word{1} << (i % 64)); }

  void trim(Word* row) const {
    if (n_ % 64 != 0) row[words_ - 1] &= (Word{1} << (n_ % 64)) - 1;
  }

  const Word* row(std::size_t i) const { return rows_.data() + i * words_; }

  static bool any(const std::vector<Word>& s) {
    return std::any_of(s.begin(), s.end(), [](Word w) { return w != 0; });
  }

  /// Greedy sequential coloring of `candidates`; `order` lists vertices by
  /// color class and `bounds[i]` is the color (1-based) of order[i].
  void color_sort(const std::vector<Word>& candidates, std::vector<std::size_t>& order,
                  std::vector<std::size_t>& bounds) const {
    std::vector<Word> uncolored = candidates;
    std::vector<Word> q(words_);
    std::size_t color = 0;
    while (any(uncolored)) {
      ++color;
      q = uncolored;
      for (std::size_t w = 0; w < words_; ++w) {
        while (q[w] != 0) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(q[w]));
          uncolored[w] &= ~(Word{1} << (v % 64));
          const Word* nv = row(v);
          for (std::size_t k = w; k < words_; ++k) q[k] &= ~nv[k];
          q[w] &= ~(Word{1} << (v % 64));
          order.push_back(v);
          bounds.push_back(color);
        }
      }
    }
  }

  void expand(std::vector<Word> candidates) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("clique search exceeded " + std::to_string(budget_) +
                               " nodes",
                           best_.size(), std::max(initial_upper_, best_.size()));
    }
    std::vector<std::size_t> order;
    std::vector<std::size_t> bounds;
    color_sort(candidates, order, bounds);
    std::vector<Word> next(words_);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + bounds[i] <= best_.size()) return;
      const std::size_t v = order[i];
      const Word* nv = row(v);
      bool nonempty = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = candidates[w] & nv[w];
        nonempty |= next[w] != 0;
      }
      current_.push_back(v);
      if (!nonempty) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
      clear_bit(candidates.data(), v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::size_t initial_upper_ = 0;
  std::vector<Vertex> order_;  // rank -> original vertex
  std::vector<Word> rows_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

VertexSet maximum_clique(const Graph& g, std::uint64_t node_budget) {
  CliqueSearch search(g, false, node_budget);
  return VertexSet::from_unsorted(search.run());
}

std::size_t max_clique_exact(const Graph& g, std::uint64_t node_budget) {
  return maximum_clique(g, node_budget).size();
}

VertexSet greedy_independent_set(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<char> alive(n, 1);
  std::vector<std::uint32_t> dec(n, 0);
  std::vector<Vertex> touched;
  std::vector<Vertex> removed;
  std::vector<Vertex> picked;
  while (!queue.empty()) {
    const Vertex v = queue.begin()->second;
    picked.push_back(v);
    removed.assign(1, v);
    for (Vertex u : g.neighbors(v)) {
      if (alive[u]) removed.push_back(u);
    }
    for (Vertex x : removed) {
      alive[x] = 0;
      queue.erase({deg[x], x});
    }
    for (Vertex x : removed) {
      for (Vertex y : g.neighbors(x)) {
        if (!alive[y]) continue;
        if (dec[y]++ == 0) touched.push_back(y);
      }
    }
    for (Vertex y : touched) {
      queue.erase({deg[y], y});
      deg[y] -= dec[y];
      dec[y] = 0;
      queue.emplace(deg[y], y);
    }
    touched.clear();
  }
  return VertexSet::from_unsorted(std::move(picked));
}

std::size_t independence_number(const Graph& g, IndependenceMode mode,
                                std::uint64_t node_budget) {
  if (mode == IndependenceMode::Greedy) return greedy_independent_set(g).size();
  CliqueSearch search(g, true, node_budget);
  return search.run().size();
}

}  // namespace powergraph
