#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kforest/forest_family.hpp"
#include "kforest/multigraph.hpp"

namespace kforest {

// Graph file format (DIMACS-flavored):
//   c <comment>
//   p kforest <n> <m> <k>
//   e <u> <v>            (1-indexed endpoints, one line per edge)
// The declared m counts every `e` line. Edge ids follow the order of the
// kept edges; self-loop lines are legal but dropped with a warning.
struct ParsedGraph {
  MultiGraph graph;
  int k;
  int self_loops_dropped;
  std::vector<std::string> warnings;
};

ParsedGraph parse_graph(std::istream& in);
ParsedGraph parse_graph_file(const std::string& path);

void emit_graph(std::ostream& out, const MultiGraph& g, int k,
                const std::vector<std::string>& comments = {});

// Solution file format:
//   s kforest <size>
//   a <edge_id> <forest_index>   (both 1-indexed; unassigned edges omitted)
ForestFamily parse_solution(std::istream& in, const MultiGraph& g, int k);
ForestFamily parse_solution_file(const std::string& path, const MultiGraph& g,
                                 int k);

void emit_solution(std::ostream& out, const ForestFamily& fam);

}  // namespace kforest
