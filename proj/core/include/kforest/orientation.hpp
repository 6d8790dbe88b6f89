#pragma once

#include <vector>

#include "kforest/errors.hpp"
#include "kforest/forest_family.hpp"
#include "kforest/multigraph.hpp"

namespace kforest {

// Per-edge head choice for a subgraph, with an indegree table kept in sync.
class Orientation {
 public:
  explicit Orientation(const MultiGraph& g)
      : head_(g.edge_capacity(), -1), indeg_(g.vertex_capacity(), 0) {}

  void orient(const MultiGraph& g, EdgeId e, Vertex head) {
    if (!g.edge_alive(e)) throw input_error("orient: unknown edge");
    auto [u, v] = g.endpoints(e);
    if (head != u && head != v)
      throw input_error("orient: head is not an endpoint of the edge");
    if (e >= static_cast<EdgeId>(head_.size())) head_.resize(e + 1, -1);
    if (head_[e] == -1) order_.push_back(e);
    else --indeg_[head_[e]];
    head_[e] = head;
    ++indeg_[head];
  }

  bool contains(EdgeId e) const {
    return e >= 0 && e < static_cast<EdgeId>(head_.size()) && head_[e] != -1;
  }
  Vertex head(EdgeId e) const {
    if (!contains(e)) throw input_error("head: edge is not oriented");
    return head_[e];
  }
  int indegree(Vertex v) const {
    return (v >= 0 && v < static_cast<Vertex>(indeg_.size())) ? indeg_[v] : 0;
  }
  int size() const { return static_cast<int>(order_.size()); }

  // Oriented edges in insertion order.
  const std::vector<EdgeId>& edges() const { return order_; }

 private:
  std::vector<Vertex> head_;
  std::vector<int> indeg_;
  std::vector<EdgeId> order_;
};

// Roots each tree component of each forest at its lowest-id vertex and
// directs edges away from the root, so indegree <= 1 within a forest and
// <= k over the whole family. Throws internal_error if some forest of f
// contains a cycle.
Orientation orient_forests(const MultiGraph& g, const ForestFamily& f);

}  // namespace kforest
