#include "powergraph/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "powergraph/error.hpp"

namespace powergraph {

namespace {

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& msg) {
  throw IoError("line " + std::to_string(line_no) + ": " + msg);
}

Graph build(std::size_t n, const std::vector<Edge>& edges) {
  try {
    return Graph::from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    if (!have_header) {
      if (!(ss >> n >> m)) parse_fail(line_no, "expected header 'n m'");
      have_header = true;
      edges.reserve(m);
      continue;
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!(ss >> u >> v)) parse_fail(line_no, "expected 'u v'");
    if (u >= n || v >= n) parse_fail(line_no, "vertex out of range");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw IoError("edge list: missing header");
  if (edges.size() != m) {
    throw IoError("edge list: header announces " + std::to_string(m) +
                  " edges, found " + std::to_string(edges.size()));
  }
  return build(n, edges);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream ss(comment);
    std::string line;
    while (std::getline(ss, line)) out << "c " << line << '\n';
  }
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_problem = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c" || tag.empty()) continue;
    if (tag == "p") {
      std::string kind;
      std::size_t m = 0;
      if (!(ss >> kind >> n >> m) || (kind != "edge" && kind != "col")) {
        parse_fail(line_no, "expected 'p edge n m'");
      }
      have_problem = true;
      edges.reserve(m);
    } else if (tag == "e") {
      if (!have_problem) parse_fail(line_no, "edge before problem line");
      std::uint64_t u = 0;
      std::uint64_t v = 0;
      if (!(ss >> u >> v)) parse_fail(line_no, "expected 'e u v'");
      if (u < 1 || v < 1 || u > n || v > n) parse_fail(line_no, "vertex out of range");
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
    } else {
      parse_fail(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_problem) throw IoError("dimacs: missing problem line");
  return build(n, edges);
}

GraphFormat format_for_path(const std::string& path) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".col") || ends_with(".dimacs") ? GraphFormat::Dimacs
                                                   : GraphFormat::EdgeList;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return format_for_path(path) == GraphFormat::Dimacs ? read_dimacs(in)
                                                      : read_edge_list(in);
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  if (format_for_path(path) == GraphFormat::Dimacs) {
    write_dimacs(out, g);
  } else {
    write_edge_list(out, g);
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace powergraph
