#pragma once

#include <vector>

#include "kforest/forest_family.hpp"
#include "kforest/multigraph.hpp"

namespace kforest {

// One contraction event: the component vertex set U, the k spanning trees
// that were inside it, the non-tree edges deleted with it, and the endpoint
// remaps needed to undo it.
struct ContractionRecord {
  Vertex supervertex = -1;
  std::vector<Vertex> members;  // sorted ascending; members[0] == supervertex
  std::vector<std::vector<EdgeId>> trees;  // trees[i] = T_{i+1}
  std::vector<EdgeId> discarded;           // unassigned edges inside U

  struct EndpointRemap {
    EdgeId edge;
    bool first_endpoint;
    Vertex original;
  };
  std::vector<EndpointRemap> remapped;
};

// Contracts U into its lowest-id vertex. Requires that for each forest i,
// the f-edges induced by U form a spanning tree of U. Tree edges move from
// f into the record; unassigned induced edges are deleted (recorded as
// discarded); all other edges keep their ids with endpoints remapped.
ContractionRecord contract(MultiGraph& g, ForestFamily& f,
                           const std::vector<Vertex>& u);

// Replays records in LIFO order: re-expands each supervertex and adds T_i
// back into forest i. Leaves `records` empty.
void uncontract_all(MultiGraph& g, ForestFamily& f,
                    std::vector<ContractionRecord>& records);

}  // namespace kforest
