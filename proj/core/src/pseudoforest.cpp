#include "kforest/pseudoforest.hpp"

#include <algorithm>

namespace kforest {

GStar build_gstar(const MultiGraph& g, int k) {
  if (k < 1) throw input_error("build_gstar: k must be >= 1");
  std::vector<EdgeId> edges = g.live_edges();
  std::vector<Vertex> vertices = g.live_vertices();
  const int m = static_cast<int>(edges.size());
  const int n = static_cast<int>(vertices.size());
  const int s = 0;
  const int t = m + n + 1;

  GStar gs{FlowNetwork(m + n + 2, s, t),
           k,
           std::vector<int>(g.edge_capacity(), -1),
           std::vector<int>(g.vertex_capacity(), -1),
           std::vector<int>(g.edge_capacity(), -1),
           std::vector<int>(g.edge_capacity(), -1),
           std::vector<int>(g.edge_capacity(), -1),
           std::vector<int>(g.vertex_capacity(), -1),
           edges};

  for (int i = 0; i < m; ++i) gs.edge_node[edges[i]] = 1 + i;
  for (int j = 0; j < n; ++j) gs.vertex_node[vertices[j]] = 1 + m + j;

  for (EdgeId e : edges) {
    gs.source_arc[e] = gs.net.add_arc(s, gs.edge_node[e], 1);
    auto [u, v] = g.endpoints(e);
    gs.first_arc[e] = gs.net.add_arc(gs.edge_node[e], gs.vertex_node[u], 1);
    gs.second_arc[e] = gs.net.add_arc(gs.edge_node[e], gs.vertex_node[v], 1);
  }
  for (Vertex v : vertices) gs.sink_arc[v] = gs.net.add_arc(gs.vertex_node[v], t, k);
  return gs;
}

void flow_from_oriented_subgraph(GStar& gs, const MultiGraph& g,
                                 const Orientation& h) {
  for (EdgeId e : h.edges()) {
    if (!g.edge_alive(e) || gs.edge_node[e] == -1)
      throw input_error("oriented subgraph refers to an edge outside the graph");
    Vertex head = h.head(e);
    if (h.indegree(head) > gs.k)
      throw input_error("oriented subgraph violates the indegree bound at vertex " +
                        std::to_string(head));
  }
  for (EdgeId e : h.edges()) {
    auto [u, v] = g.endpoints(e);
    Vertex head = h.head(e);
    gs.net.preload(gs.source_arc[e], 1);
    gs.net.preload(head == u ? gs.first_arc[e] : gs.second_arc[e], 1);
    gs.net.preload(gs.sink_arc[head], 1);
  }
}

PseudoforestResult pseudoforests(const MultiGraph& g, const Orientation& h,
                                 int k) {
  GStar gs = build_gstar(g, k);
  flow_from_oriented_subgraph(gs, g, h);
  // Pin h inside the answer: the residual direction (e, s) may not be used,
  // so s->e stays saturated for every e in h.
  for (EdgeId e : h.edges()) gs.net.forbid_residual_reverse(gs.source_arc[e]);
  gs.net.max_flow();

  PseudoforestResult res{{}, Orientation(g)};
  for (EdgeId e : gs.edge_order) {
    if (gs.net.flow_on(gs.source_arc[e]) == 0) continue;
    res.edges.push_back(e);
    auto [u, v] = g.endpoints(e);
    if (gs.net.flow_on(gs.first_arc[e]) == 1) {
      res.orientation.orient(g, e, u);
    } else if (gs.net.flow_on(gs.second_arc[e]) == 1) {
      res.orientation.orient(g, e, v);
    } else {
      throw internal_error("pseudoforests: edge flow without a head arc");
    }
  }
  return res;
}

}  // namespace kforest
