#include "kforest/contraction.hpp"

#include <algorithm>

#include "kforest/union_find.hpp"

namespace kforest {

ContractionRecord contract(MultiGraph& g, ForestFamily& f,
                           const std::vector<Vertex>& u) {
  if (u.size() < 2) throw input_error("contract: need at least two vertices");
  std::vector<Vertex> members(u);
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw input_error("contract: duplicate vertex in U");

  std::vector<char> in_u(g.vertex_capacity(), 0);
  for (Vertex v : members) {
    if (!g.vertex_alive(v)) throw input_error("contract: dead vertex in U");
    in_u[v] = 1;
  }

  // Split the incident edges into internal (both endpoints in U) and
  // boundary ones. Internal edges are seen from both sides; dedupe.
  std::vector<EdgeId> internal;
  std::vector<EdgeId> boundary;
  std::vector<char> seen(g.edge_capacity(), 0);
  for (Vertex v : members) {
    g.for_each_incident(v, [&](EdgeId e) {
      if (seen[e]) return;
      seen[e] = 1;
      auto [a, b] = g.endpoints(e);
      (in_u[a] && in_u[b] ? internal : boundary).push_back(e);
    });
  }
  std::sort(internal.begin(), internal.end());
  std::sort(boundary.begin(), boundary.end());

  // Precondition: each forest restricted to U is a spanning tree of U.
  const int k = f.k();
  const int tree_size = static_cast<int>(members.size()) - 1;
  ContractionRecord rec;
  rec.trees.assign(k, {});
  for (EdgeId e : internal) {
    int forest = f.forest_of(e);
    if (forest) rec.trees[forest - 1].push_back(e);
    else rec.discarded.push_back(e);
  }
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(rec.trees[i].size()) != tree_size)
      throw input_error("contract: forest " + std::to_string(i + 1) +
                        " does not span U");
    UnionFind uf(g.vertex_capacity());
    int united = 0;
    for (EdgeId e : rec.trees[i]) {
      auto [a, b] = g.endpoints(e);
      if (uf.unite(a, b)) ++united;
    }
    if (united != tree_size)
      throw input_error("contract: forest " + std::to_string(i + 1) +
                        " is not a spanning tree of U");
  }

  const Vertex super = members.front();
  rec.supervertex = super;
  rec.members = members;

  for (EdgeId e : internal) {
    if (f.assigned(e)) f.unassign(e);
    g.kill_edge(e);
  }
  for (EdgeId e : boundary) {
    auto [a, b] = g.endpoints(e);
    if (in_u[a] && a != super) {
      rec.remapped.push_back({e, true, a});
      g.remap_endpoint(e, a, super);
    }
    if (in_u[b] && b != super) {
      rec.remapped.push_back({e, false, b});
      g.remap_endpoint(e, b, super);
    }
  }
  for (std::size_t i = 1; i < members.size(); ++i) g.kill_vertex(members[i]);
  return rec;
}

static void uncontract_one(MultiGraph& g, ForestFamily& f,
                           const ContractionRecord& rec) {
  // The remapped entries were appended to the supervertex's incidence list
  // last; nothing later survives thanks to LIFO replay.
  g.trim_incidence(rec.supervertex, static_cast<int>(rec.remapped.size()));
  for (std::size_t i = 1; i < rec.members.size(); ++i)
    g.revive_vertex(rec.members[i]);
  for (auto it = rec.remapped.rbegin(); it != rec.remapped.rend(); ++it)
    g.restore_endpoint(it->edge, it->first_endpoint, it->original);
  for (EdgeId e : rec.discarded) g.revive_edge(e);
  for (int i = 0; i < static_cast<int>(rec.trees.size()); ++i) {
    for (EdgeId e : rec.trees[i]) {
      g.revive_edge(e);
      f.assign(e, i + 1);
    }
  }
}

void uncontract_all(MultiGraph& g, ForestFamily& f,
                    std::vector<ContractionRecord>& records) {
  while (!records.empty()) {
    uncontract_one(g, f, records.back());
    records.pop_back();
  }
}

}  // namespace kforest
