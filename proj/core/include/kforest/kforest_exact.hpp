#pragma once

#include <optional>
#include <queue>
#include <vector>

#include "kforest/forest_family.hpp"
#include "kforest/multigraph.hpp"
#include "kforest/orientation.hpp"
#include "kforest/union_find.hpp"

namespace kforest {

// Classical matroid-union augmentation over k graphic matroids. The state
// owns the working family plus per-forest component structures; augment_edge
// runs one BFS over the exchange graph.
class ExchangeState {
 public:
  ExchangeState(const MultiGraph& g, int k);
  // Restricts augmentation to the given edge subset.
  ExchangeState(const MultiGraph& g, int k, const std::vector<EdgeId>& allowed);

  // Warm start. The seed must be acyclic, disjoint, and inside the allowed
  // edge set.
  void seed(const ForestFamily& f);

  // Tries to grow |F| by one by inserting e, applying a swap sequence if
  // needed. Returns false (state unchanged) when e is spanned.
  bool augment_edge(EdgeId e);

  const ForestFamily& family() const { return fam_; }
  ForestFamily take() { return std::move(fam_); }

 private:
  static constexpr EdgeId kUnlabeled = -2;
  static constexpr EdgeId kRoot = -1;

  void ensure_uf(int i);
  void ensure_rooted(int i);
  Vertex jump_find(int i, Vertex v);
  void jump_skip(int i, Vertex v, Vertex parent);
  void label_path(int i, EdgeId from, Vertex x, Vertex y,
                  std::queue<EdgeId>& q);
  void apply_chain(EdgeId last, int target_forest);
  void clear_scratch();

  const MultiGraph* g_;
  int k_;
  std::vector<char> allowed_;
  ForestFamily fam_;

  std::vector<UnionFind> uf_;
  std::vector<char> uf_dirty_;

  // Vertices connected here are inside a region where F is known maximal
  // (a failed search certifies one). F only grows, so closure is monotone
  // and edges within a region stay spanned; they are rejected without a
  // search.
  UnionFind dead_;

  std::vector<std::vector<Vertex>> par_v_;
  std::vector<std::vector<EdgeId>> par_e_;
  std::vector<std::vector<int>> depth_;
  std::vector<char> rooted_dirty_;

  // BFS scratch, cleared via touched lists between augmentations.
  std::vector<EdgeId> pred_;
  std::vector<EdgeId> touched_edges_;
  std::vector<std::vector<Vertex>> jump_;
  std::vector<std::pair<int, Vertex>> touched_jump_;
};

// Maximum k-forest family of g (optionally warm-started from *seed).
// Deterministic: edges are scanned in ascending id order.
ForestFamily solve_kforest(const MultiGraph& g, int k,
                           const ForestFamily* seed = nullptr);

// Same, restricted to an edge subset of g.
ForestFamily solve_kforest_on(const MultiGraph& g, int k,
                              const std::vector<EdgeId>& allowed,
                              const ForestFamily* seed = nullptr);

// The bounded-indegree directed k-forest subroutine, for the one regime the
// main loop produces: the orientation o (whose domain is the subgraph to
// pack) already satisfies indegree <= k everywhere, so the degree bound can
// never bind and the problem reduces to undirected k-forest on o's edges.
// Orientations where the bound would bind are rejected with input_error.
ForestFamily bounded_indegree_forests(const MultiGraph& g, const Orientation& o,
                                      int k, const ForestFamily* seed = nullptr);

// Exact optimum by enumerating vertex partitions: min over partitions
// {V_1..V_t} of (#crossing edges + k * sum(|V_i|-1)), which equals OPT by
// the matroid union theorem. Witness is an argmin partition. n <= 12.
struct PartitionCertificate {
  int value;
  std::vector<std::vector<Vertex>> witness;
};
PartitionCertificate partition_opt_certificate(const MultiGraph& g, int k);

}  // namespace kforest
