#pragma once

#include <iosfwd>
#include <string>

#include "powergraph/graph.hpp"

namespace powergraph {

// Edge-list text: header "n m", then m lines "u v" with 0-indexed u < v in
// lexicographic order. The writer is canonical, so equal graphs serialize to
// identical bytes.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

// DIMACS .col: "c" comment lines, "p edge n m", then "e u v" 1-indexed.
// The reader accepts "p col" too and tolerates both orientations of an edge.
void write_dimacs(std::ostream& out, const Graph& g,
                  const std::string& comment = {});
Graph read_dimacs(std::istream& in);

enum class GraphFormat { EdgeList, Dimacs };

/// Chooses by extension: .col/.dimacs -> DIMACS, anything else edge list.
GraphFormat format_for_path(const std::string& path);

Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

}  // namespace powergraph
