#include "kforest/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kforest {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw input_error("parse error on line " + std::to_string(line) + ": " + msg);
}

}  // namespace

ParsedGraph parse_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int n = 0, m = 0, k = 0;
  int edge_lines = 0;
  int dropped = 0;
  std::vector<std::string> warnings;
  MultiGraph g(0);

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") {
      continue;
    } else if (tag == "p") {
      if (have_header) parse_fail(lineno, "duplicate problem line");
      std::string kind;
      if (!(ls >> kind >> n >> m >> k) || kind != "kforest")
        parse_fail(lineno, "expected 'p kforest <n> <m> <k>'");
      if (n < 0 || m < 0 || k < 1)
        parse_fail(lineno, "bad sizes in problem line");
      g = MultiGraph(n);
      have_header = true;
    } else if (tag == "e") {
      if (!have_header) parse_fail(lineno, "edge before problem line");
      int u, v;
      if (!(ls >> u >> v)) parse_fail(lineno, "expected 'e <u> <v>'");
      if (u < 1 || u > n || v < 1 || v > n)
        parse_fail(lineno, "endpoint out of range 1.." + std::to_string(n));
      ++edge_lines;
      if (u == v) {
        ++dropped;
        warnings.push_back("line " + std::to_string(lineno) +
                           ": self-loop at vertex " + std::to_string(u) +
                           " dropped");
      } else {
        g.add_edge(u - 1, v - 1);
      }
    } else {
      parse_fail(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw input_error("parse error: missing problem line");
  if (edge_lines != m)
    throw input_error("parse error: problem line declares " + std::to_string(m) +
                      " edges but " + std::to_string(edge_lines) + " were given");
  return {std::move(g), k, dropped, std::move(warnings)};
}

ParsedGraph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open graph file: " + path);
  return parse_graph(in);
}

void emit_graph(std::ostream& out, const MultiGraph& g, int k,
                const std::vector<std::string>& comments) {
  for (const std::string& c : comments) out << "c " << c << "\n";
  out << "p kforest " << g.vertex_capacity() << " " << g.live_edge_count()
      << " " << k << "\n";
  for (EdgeId e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    out << "e " << (u + 1) << " " << (v + 1) << "\n";
  }
}

ForestFamily parse_solution(std::istream& in, const MultiGraph& g, int k) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  int declared = 0;
  int assignments = 0;
  ForestFamily fam(k);

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") {
      continue;
    } else if (tag == "s") {
      if (have_header) parse_fail(lineno, "duplicate solution line");
      std::string kind;
      if (!(ls >> kind >> declared) || kind != "kforest" || declared < 0)
        parse_fail(lineno, "expected 's kforest <size>'");
      have_header = true;
    } else if (tag == "a") {
      if (!have_header) parse_fail(lineno, "assignment before solution line");
      int edge, forest;
      if (!(ls >> edge >> forest)) parse_fail(lineno, "expected 'a <edge_id> <forest_index>'");
      if (edge < 1 || edge > g.edge_capacity() || !g.edge_alive(edge - 1))
        parse_fail(lineno, "unknown edge id " + std::to_string(edge));
      if (forest < 1 || forest > k)
        parse_fail(lineno, "forest index out of range 1.." + std::to_string(k));
      if (fam.assigned(edge - 1))
        parse_fail(lineno, "edge " + std::to_string(edge) + " assigned twice");
      fam.assign(edge - 1, forest);
      ++assignments;
    } else {
      parse_fail(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!have_header) throw input_error("parse error: missing solution line");
  if (assignments != declared)
    throw input_error("parse error: solution line declares " +
                      std::to_string(declared) + " assignments but " +
                      std::to_string(assignments) + " were given");
  return fam;
}

ForestFamily parse_solution_file(const std::string& path, const MultiGraph& g,
                                 int k) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open solution file: " + path);
  return parse_solution(in, g, k);
}

void emit_solution(std::ostream& out, const ForestFamily& fam) {
  out << "s kforest " << fam.size() << "\n";
  for (EdgeId e : fam.edges())
    out << "a " << (e + 1) << " " << fam.forest_of(e) << "\n";
}

}  // namespace kforest
