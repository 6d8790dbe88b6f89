#pragma once

#include <cstdint>
#include <vector>

#include "kforest/errors.hpp"

namespace kforest {

// Integer max flow (blocking-flow / level-graph search) with three extras
// the callers here need: a feasible flow can be preloaded and is kept as a
// warm start, individual residual directions can be forbidden, and the
// maximal source side of a minimum cut can be read off after solving.
// Deterministic given arc insertion order. Integer arithmetic only.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink);

  // Returns the arc's id. Capacity must be >= 0.
  int add_arc(int tail, int head, int capacity);

  // Adds `amount` units of flow on the arc. Feasibility (conservation) is
  // checked when max_flow() runs; per-arc bounds are checked here.
  void preload(int arc, int amount);

  // Bans the residual direction head->tail of the given arc: no search may
  // cancel flow on it.
  void forbid_residual_reverse(int arc);

  // Maximum s-t flow value, including any preloaded amount.
  std::int64_t max_flow();

  bool solved() const { return solved_; }
  std::int64_t value() const { return value_; }
  int flow_on(int arc) const;

  // Complement of {nodes that reach the sink in the residual graph}: the
  // source side of the unique inclusion-maximal minimum cut. Requires
  // max_flow() to have run.
  std::vector<int> min_cut_source_side() const;

  int node_count() const { return static_cast<int>(adj_.size()); }
  int source() const { return source_; }
  int sink() const { return sink_; }

 private:
  struct Arc {
    int to;
    int cap;
    int flow;
    bool forbidden;
  };

  int residual(int a) const {
    return arcs_[a].forbidden ? 0 : arcs_[a].cap - arcs_[a].flow;
  }
  void check_preload_feasible() const;
  bool build_levels();

  std::vector<Arc> arcs_;  // forward arc 2i, reverse arc 2i+1
  std::vector<std::vector<int>> adj_;
  std::vector<int> level_;
  std::vector<int> it_;
  int source_, sink_;
  bool solved_ = false;
  std::int64_t value_ = 0;
};

}  // namespace kforest
