#pragma once

#include <vector>

#include "kforest/errors.hpp"
#include "kforest/multigraph.hpp"

namespace kforest {

// Partial assignment of edges to forest indices 1..k. Disjointness is by
// construction (one slot per edge); acyclicity is the caller's obligation
// and can be re-checked with forests_acyclic().
class ForestFamily {
 public:
  explicit ForestFamily(int k) : k_(k) {
    if (k < 1) throw input_error("forest count k must be >= 1");
  }

  int k() const { return k_; }
  int size() const { return size_; }

  // 0 when unassigned, else 1..k.
  int forest_of(EdgeId e) const {
    return (e >= 0 && e < static_cast<EdgeId>(slot_.size())) ? slot_[e] : 0;
  }
  bool assigned(EdgeId e) const { return forest_of(e) != 0; }

  void assign(EdgeId e, int forest) {
    check_forest(forest);
    if (assigned(e)) throw input_error("edge already assigned to a forest");
    grow(e);
    slot_[e] = forest;
    ++size_;
  }

  void reassign(EdgeId e, int forest) {
    check_forest(forest);
    if (!assigned(e)) throw input_error("reassign of unassigned edge");
    slot_[e] = forest;
  }

  void unassign(EdgeId e) {
    if (!assigned(e)) throw input_error("unassign of unassigned edge");
    slot_[e] = 0;
    --size_;
  }

  // All assigned edges, ascending id.
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    out.reserve(size_);
    for (EdgeId e = 0; e < static_cast<EdgeId>(slot_.size()); ++e)
      if (slot_[e]) out.push_back(e);
    return out;
  }

  std::vector<EdgeId> forest_edges(int forest) const {
    check_forest(forest);
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(slot_.size()); ++e)
      if (slot_[e] == forest) out.push_back(e);
    return out;
  }

 private:
  void check_forest(int forest) const {
    if (forest < 1 || forest > k_)
      throw input_error("forest index out of range 1..k");
  }
  void grow(EdgeId e) {
    if (e < 0) throw input_error("negative edge id");
    if (e >= static_cast<EdgeId>(slot_.size())) slot_.resize(e + 1, 0);
  }

  int k_;
  std::vector<int> slot_;
  int size_ = 0;
};

// True iff every forest of f is acyclic in g and every assigned edge is alive.
bool forests_acyclic(const MultiGraph& g, const ForestFamily& f);

}  // namespace kforest
