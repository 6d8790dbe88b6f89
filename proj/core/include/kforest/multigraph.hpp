#pragma once

#include <utility>
#include <vector>

#include "kforest/errors.hpp"

namespace kforest {

using Vertex = int;
using EdgeId = int;

// Undirected multigraph with stable edge ids. Ids are handed out once and
// never reused; contraction marks vertices/edges dead instead of erasing
// them, so a later uncontraction can restore the exact previous state.
// Self-loops are never stored: they can never belong to a forest.
class MultiGraph {
 public:
  explicit MultiGraph(int n);

  // Parallel edges are fine. Self-loops are rejected; callers that read
  // untrusted files drop them before insertion.
  EdgeId add_edge(Vertex u, Vertex v);

  int vertex_capacity() const { return static_cast<int>(vertex_alive_.size()); }
  int edge_capacity() const { return static_cast<int>(edges_.size()); }
  int live_vertex_count() const { return live_vertices_; }
  int live_edge_count() const { return live_edges_; }

  bool vertex_alive(Vertex v) const {
    return v >= 0 && v < vertex_capacity() && vertex_alive_[v];
  }
  bool edge_alive(EdgeId e) const {
    return e >= 0 && e < edge_capacity() && edges_[e].alive;
  }

  std::pair<Vertex, Vertex> endpoints(EdgeId e) const {
    check_edge(e);
    return {edges_[e].u, edges_[e].v};
  }

  std::vector<Vertex> live_vertices() const;
  std::vector<EdgeId> live_edges() const;

  // Live edges currently incident to v, ascending id. The backing incidence
  // lists keep stale entries across contractions; this filters them out.
  std::vector<EdgeId> incident_edges(Vertex v) const;

  template <class Fn>
  void for_each_incident(Vertex v, Fn&& fn) const {
    check_vertex(v);
    for (EdgeId e : inc_[v]) {
      if (!edges_[e].alive) continue;
      if (edges_[e].u != v && edges_[e].v != v) continue;
      fn(e);
    }
  }

  // Vertex sets of the connected components over live vertices and edges.
  std::vector<std::vector<Vertex>> connected_components() const;

  // Copy with only the given vertices (and the edges among them) alive.
  MultiGraph restricted_to(const std::vector<Vertex>& vs) const;

  // --- contraction plumbing --------------------------------------------
  // Low-level mutators used by contract()/uncontract_all(). They keep the
  // no-self-loop and liveness invariants but not forest bookkeeping.
  void remap_endpoint(EdgeId e, Vertex from, Vertex to);
  void restore_endpoint(EdgeId e, bool first_endpoint, Vertex original);
  void kill_edge(EdgeId e);
  void revive_edge(EdgeId e);
  void kill_vertex(Vertex v);
  void revive_vertex(Vertex v);
  // Drops the last `count` entries of v's incidence list (the entries a
  // contraction appended).
  void trim_incidence(Vertex v, int count);

 private:
  struct EdgeRec {
    Vertex u, v;
    bool alive;
  };

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= vertex_capacity() || !vertex_alive_[v])
      throw input_error("unknown or dead vertex " + std::to_string(v));
  }
  void check_edge(EdgeId e) const {
    if (e < 0 || e >= edge_capacity())
      throw input_error("unknown edge id " + std::to_string(e));
  }

  std::vector<EdgeRec> edges_;
  std::vector<bool> vertex_alive_;
  std::vector<std::vector<EdgeId>> inc_;
  int live_vertices_ = 0;
  int live_edges_ = 0;
};

// Edge ids with both endpoints in s, optionally intersected with *restrict_to.
// Result is sorted ascending.
std::vector<EdgeId> induced_edge_set(const MultiGraph& g,
                                     const std::vector<Vertex>& s,
                                     const std::vector<EdgeId>* restrict_to = nullptr);

// |vertices touched by edge_set| - |connected components of edge_set|,
// i.e. the size of a spanning forest of the edge set.
int spanning_rank(const MultiGraph& g, const std::vector<EdgeId>& edge_set);

}  // namespace kforest
