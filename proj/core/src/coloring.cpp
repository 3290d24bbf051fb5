#include "powergraph/coloring.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "powergraph/clique.hpp"
#include "powergraph/error.hpp"
#include "powergraph/graph_ops.hpp"
#include "powergraph/parallel.hpp"
#include "powergraph/power_metrics.hpp"
#include "powergraph/traversal.hpp"

namespace powergraph {

namespace {

constexpr Color kUncolored = ~Color{0};

std::size_t palette_of(const std::vector<Color>& colors) {
  Color top = 0;
  bool any = false;
  for (Color c : colors) {
    if (c == kUncolored) continue;
    top = std::max(top, c);
    any = true;
  }
  return any ? static_cast<std::size_t>(top) + 1 : 0;
}

/// First-fit over G^r for the vertices in `order`; vertices already holding a
/// color in `colors` count as conflicts and are left untouched.
void first_fit(const Graph& g, unsigned r, std::span<const Vertex> order,
               std::vector<Color>& colors) {
  TruncatedBfs bfs(g);
  std::vector<std::uint32_t> seen(g.num_vertices() + 1, 0);
  std::uint32_t stamp = 0;
  for (Vertex v : order) {
    if (colors[v] != kUncolored) continue;
    bfs.explore(v, r);
    ++stamp;
    for (Vertex u : bfs.order()) {
      if (colors[u] != kUncolored && colors[u] < seen.size()) seen[colors[u]] = stamp;
    }
    Color c = 0;
    while (seen[c] == stamp) ++c;
    colors[v] = c;
  }
}

}  // namespace

Coloring Coloring::from_colors(std::vector<Color> colors, unsigned radius) {
  Coloring c;
  c.palette_size = palette_of(colors);
  c.colors = std::move(colors);
  c.radius = radius;
  return c;
}

Coloring greedy_power_coloring(const Graph& g, unsigned r, std::span<const Vertex> order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) throw std::invalid_argument("order must list every vertex once");
  std::vector<char> hit(n, 0);
  for (Vertex v : order) {
    if (v >= n || hit[v]) throw std::invalid_argument("order is not a permutation");
    hit[v] = 1;
  }
  std::vector<Color> colors(n, kUncolored);
  first_fit(g, r, order, colors);
  return Coloring::from_colors(std::move(colors), r);
}

Coloring greedy_power_coloring(const Graph& g, unsigned r) {
  const VertexSet all = VertexSet::all(g.num_vertices());
  return greedy_power_coloring(g, r, all.span());
}

namespace {

/// Per-vertex neighbor color counts and saturation degrees for DSATUR.
class Saturation {
 public:
  Saturation(const Graph& g, std::size_t capacity)
      : g_(&g), cap_(std::max<std::size_t>(capacity, 1)),
        counts_(g.num_vertices() * cap_, 0), sat_(g.num_vertices(), 0),
        free_degree_(g.num_vertices()), colors_(g.num_vertices(), kUncolored) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) free_degree_[v] = g.degree(v);
  }

  void assign(Vertex v, Color c) {
    colors_[v] = c;
    for (Vertex u : g_->neighbors(v)) {
      if (counts_[u * cap_ + c]++ == 0) ++sat_[u];
      --free_degree_[u];
    }
  }

  void unassign(Vertex v) {
    const Color c = colors_[v];
    colors_[v] = kUncolored;
    for (Vertex u : g_->neighbors(v)) {
      if (--counts_[u * cap_ + c] == 0) --sat_[u];
      ++free_degree_[u];
    }
  }

  bool blocked(Vertex v, Color c) const { return counts_[v * cap_ + c] != 0; }
  bool colored(Vertex v) const { return colors_[v] != kUncolored; }
  Color color(Vertex v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

  /// Uncolored vertex with max saturation, then max uncolored degree, then
  /// smallest index.
  Vertex select() const {
    Vertex best = kNoVertex;
    for (Vertex v = 0; v < colors_.size(); ++v) {
      if (colored(v)) continue;
      if (best == kNoVertex || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && free_degree_[v] > free_degree_[best])) {
        best = v;
      }
    }
    return best;
  }

 private:
  const Graph* g_;
  std::size_t cap_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> sat_;
  std::vector<std::size_t> free_degree_;
  std::vector<Color> colors_;
};

}  // namespace

Coloring dsatur_coloring(const Graph& g) {
  const std::size_t n = g.num_vertices();
  Saturation s(g, g.max_degree() + 1);
  Color used = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const Vertex v = s.select();
    Color c = 0;
    while (s.blocked(v, c)) ++c;
    s.assign(v, c);
    used = std::max<Color>(used, c + 1);
  }
  return Coloring::from_colors(s.colors(), 1);
}

namespace {

class ExactColoring {
 public:
  ExactColoring(const Graph& g, std::size_t lower, const Coloring& upper,
                std::uint64_t budget)
      : g_(g), n_(g.num_vertices()), lower_(lower), best_k_(upper.palette_size),
        best_(upper.colors), budget_(budget), s_(g, upper.palette_size + 1) {}

  void precolor(const VertexSet& clique) {
    Color c = 0;
    for (Vertex v : clique) s_.assign(v, c++);
    colored_ = clique.size();
    used_ = static_cast<Color>(clique.size());
  }

  void solve() {
    if (best_k_ > lower_) search();
  }

  std::size_t best_k() const { return best_k_; }
  const std::vector<Color>& best() const { return best_; }

 private:
  // Returns true once the lower bound is matched.
  bool search() {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("chromatic search exceeded " + std::to_string(budget_) +
                               " nodes",
                           lower_, best_k_);
    }
    if (colored_ == n_) {
      best_k_ = used_;
      best_ = s_.colors();
      return best_k_ <= lower_;
    }
    const Vertex v = s_.select();
    for (Color c = 0; c < used_ && c + 1 < best_k_; ++c) {
      if (s_.blocked(v, c)) continue;
      if (descend(v, c, used_)) return true;
    }
    if (used_ + 1 < best_k_) {
      if (descend(v, used_, used_ + 1)) return true;
    }
    return false;
  }

  bool descend(Vertex v, Color c, Color used_after) {
    const Color saved = used_;
    s_.assign(v, c);
    ++colored_;
    used_ = used_after;
    const bool done = search();
    used_ = saved;
    --colored_;
    s_.unassign(v);
    return done;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t lower_;
  std::size_t best_k_;
  std::vector<Color> best_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  Saturation s_;
  std::size_t colored_ = 0;
  Color used_ = 0;
};

VertexSet greedy_clique(const Graph& g) {
  if (g.num_vertices() == 0) return {};
  Vertex start = 0;
  for (Vertex v = 1; v < g.num_vertices(); ++v) {
    if (g.degree(v) > g.degree(start)) start = v;
  }
  std::vector<Vertex> clique{start};
  for (Vertex u : g.neighbors(start)) {
    bool ok = true;
    for (Vertex w : clique) ok = ok && g.has_edge(u, w);
    if (ok) clique.push_back(u);
  }
  return VertexSet::from_unsorted(std::move(clique));
}

}  // namespace

ChromaticResult dsatur_chromatic_exact(const Graph& g_power, std::uint64_t node_budget) {
  const std::size_t n = g_power.num_vertices();
  if (n == 0) return {0, Coloring::from_colors({}, 1)};
  const Coloring upper = dsatur_coloring(g_power);
  VertexSet clique;
  try {
    clique = maximum_clique(g_power, node_budget);
  } catch (const BudgetExceeded&) {
    clique = greedy_clique(g_power);
  }
  ExactColoring exact(g_power, clique.size(), upper, node_budget);
  exact.precolor(clique);
  exact.solve();
  return {exact.best_k(), Coloring::from_colors(exact.best(), 1)};
}

Coloring two_phase_power_coloring(const Graph& g, unsigned r) {
  if (r < 2) throw std::invalid_argument("two-phase coloring needs r >= 2");
  const std::size_t n = g.num_vertices();
  const std::size_t delta_prev = power_max_degree(g, r - 1).delta;
  const VertexSet s = high_degree_set(g, r, static_cast<std::int64_t>(delta_prev));
  const VertexSet closure = neighborhood_union(g, s, r, Closure::Closed);
  const InducedSubgraph h = induced_subgraph(g, closure);
  const ForestCheck forest = is_forest(h.graph);
  if (!forest.is_forest) {
    std::vector<Vertex> cycle;
    cycle.reserve(forest.cycle.size());
    for (Vertex x : forest.cycle) cycle.push_back(h.new_to_old[x]);
    throw ForestViolation(std::move(cycle));
  }

  // Phase 1: BFS order over each tree of H, roots in increasing index.
  std::vector<Vertex> phase1;
  phase1.reserve(s.size());
  {
    const std::size_t k = h.graph.num_vertices();
    std::vector<char> visited(k, 0);
    std::vector<Vertex> queue;
    for (Vertex root = 0; root < k; ++root) {
      if (visited[root]) continue;
      visited[root] = 1;
      queue.assign(1, root);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        if (s.contains(h.new_to_old[x])) phase1.push_back(h.new_to_old[x]);
        for (Vertex y : h.graph.neighbors(x)) {
          if (!visited[y]) {
            visited[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
  }
  std::vector<Color> colors(n, kUncolored);
  first_fit(g, r, phase1, colors);
  // Phase 2: everything else in index order.
  const VertexSet all = VertexSet::all(n);
  first_fit(g, r, all.span(), colors);
  return Coloring::from_colors(std::move(colors), r);
}

ColoringCheck verify_proper_power_coloring(const Graph& g, unsigned r, const Coloring& c,
                                           unsigned workers) {
  const std::size_t n = g.num_vertices();
  if (c.colors.size() != n) return {false, std::nullopt};
  std::vector<std::optional<std::pair<Vertex, Vertex>>> first(std::max(1u, workers));
  parallel_chunks(n, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    TruncatedBfs bfs(g);
    for (std::size_t ui = begin; ui < end; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      bfs.explore(u, r);
      Vertex hit = kNoVertex;
      for (Vertex v : bfs.order()) {
        if (v > u && c.colors[v] == c.colors[u]) hit = std::min(hit, v);
      }
      if (hit != kNoVertex) {
        first[w] = std::make_pair(u, hit);
        return;
      }
    }
  });
  for (const auto& f : first) {
    if (f) return {false, f};
  }
  return {true, std::nullopt};
}

void write_coloring(std::ostream& out, const Coloring& c) {
  out << "s " << c.palette_size << ' ' << c.radius << '\n';
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    out << "c " << v << ' ' << c.colors[v] << '\n';
  }
}

Coloring read_coloring(std::istream& in) {
  std::string line;
  std::size_t declared = 0;
  unsigned radius = 1;
  bool have_header = false;
  std::vector<std::pair<std::size_t, Color>> entries;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    char tag = 0;
    ss >> tag;
    if (tag == 's') {
      if (!(ss >> declared >> radius)) throw IoError("coloring: bad header at line " + std::to_string(line_no));
      have_header = true;
    } else if (tag == 'c') {
      std::size_t v = 0;
      Color col = 0;
      if (!(ss >> v >> col)) throw IoError("coloring: bad entry at line " + std::to_string(line_no));
      entries.emplace_back(v, col);
    } else {
      throw IoError("coloring: unknown tag at line " + std::to_string(line_no));
    }
  }
  if (!have_header) throw IoError("coloring: missing 's' header");
  std::vector<Color> colors(entries.size(), kUncolored);
  for (auto [v, col] : entries) {
    if (v >= colors.size() || colors[v] != kUncolored) {
      throw IoError("coloring: vertex ids must be 0..n-1, each once");
    }
    colors[v] = col;
  }
  Coloring c = Coloring::from_colors(std::move(colors), radius);
  if (c.palette_size != declared) throw IoError("coloring: palette size mismatch");
  return c;
}

void write_dimacs_solution(std::ostream& out, const Coloring& c) {
  out << "s col " << c.palette_size << '\n';
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    out << "l " << v + 1 << ' ' << c.colors[v] + 1 << '\n';
  }
}

Coloring read_dimacs_solution(std::istream& in, unsigned radius) {
  std::string line;
  std::vector<std::pair<std::size_t, Color>> entries;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "l") {
      std::size_t v = 0;
      Color col = 0;
      if (!(ss >> v >> col) || v == 0 || col == 0) throw IoError("dimacs solution: bad 'l' line");
      entries.emplace_back(v - 1, col - 1);
    }
  }
  std::vector<Color> colors(entries.size(), kUncolored);
  for (auto [v, col] : entries) {
    if (v >= colors.size() || colors[v] != kUncolored) {
      throw IoError("dimacs solution: vertex ids must be 1..n, each once");
    }
    colors[v] = col;
  }
  return Coloring::from_colors(std::move(colors), radius);
}

}  // namespace powergraph
