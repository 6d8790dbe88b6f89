#pragma once

#include <vector>

#include "kforest/maxflow.hpp"
#include "kforest/multigraph.hpp"
#include "kforest/orientation.hpp"

namespace kforest {

// The auxiliary network over {s} | E | V | {t}: unit arcs s->e and
// e->endpoints for every edge, capacity-k arcs v->t for every vertex.
// Integer s-t flows biject with oriented subgraphs of indegree <= k.
struct GStar {
  FlowNetwork net;
  int k;
  std::vector<int> edge_node;    // by edge id, -1 if absent
  std::vector<int> vertex_node;  // by vertex id, -1 if absent
  std::vector<int> source_arc;   // s->e, by edge id
  std::vector<int> first_arc;    // e->endpoints(e).first, by edge id
  std::vector<int> second_arc;   // e->endpoints(e).second, by edge id
  std::vector<int> sink_arc;     // v->t, by vertex id
  std::vector<EdgeId> edge_order;
};

// Node numbering: s = 0, then edge nodes ascending by id, then live
// vertices ascending, then t.
GStar build_gstar(const MultiGraph& g, int k);

// Sends the flow corresponding to the oriented subgraph h: one unit along
// s -> e -> head(e) -> t per edge. Requires indegree <= k everywhere.
void flow_from_oriented_subgraph(GStar& gs, const MultiGraph& g,
                                 const Orientation& h);

struct PseudoforestResult {
  std::vector<EdgeId> edges;  // P, sorted ascending
  Orientation orientation;    // indegree <= k orientation of P
};

// Maximum subgraph P of g containing h's edges that admits an orientation
// with indegree <= k, together with such an orientation. h's own edges may
// come back reoriented.
PseudoforestResult pseudoforests(const MultiGraph& g, const Orientation& h,
                                 int k);

}  // namespace kforest
