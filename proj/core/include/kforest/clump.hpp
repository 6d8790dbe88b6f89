#pragma once

#include <vector>

#include "kforest/forest_family.hpp"
#include "kforest/multigraph.hpp"

namespace kforest {

struct ClumpComponent {
  std::vector<Vertex> vertices;             // S, sorted
  std::vector<EdgeId> edges;                // lambda_F(S), sorted
  std::vector<std::vector<EdgeId>> trees;   // trees[i] = F_{i+1} within S
};

struct ClumpReport {
  std::vector<EdgeId> clump_edges;  // L, sorted
  std::vector<ClumpComponent> components;
  int flow_calls = 0;
};

// The unique maximal vertex set A containing r (within one F-component)
// with exactly k(|A|-1) F-edges induced; possibly just {r}. Extracted as
// the maximal min-cut source side of a small flow network over the
// component's F-edges, warm-started with the away-from-r orientation.
std::vector<Vertex> tight_set_from_root(const MultiGraph& g,
                                        const ForestFamily& f,
                                        const std::vector<Vertex>& component,
                                        Vertex r, int* flow_calls = nullptr);

// The unique inclusion-maximal L subseteq F with |L| = k * rk(L), reported
// with its components and their per-forest spanning trees.
ClumpReport top_clump(const MultiGraph& g, const ForestFamily& f);

// Subset-enumeration oracle for top_clump; live vertex count <= 10.
std::vector<EdgeId> brute_force_top_clump(const MultiGraph& g,
                                          const ForestFamily& f);

// True iff |l| = k * spanning_rank(l). l must be a subset of F.
bool is_clump(const MultiGraph& g, const ForestFamily& f,
              const std::vector<EdgeId>& l);

}  // namespace kforest
