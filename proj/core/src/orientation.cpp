#include "kforest/orientation.hpp"

#include <algorithm>
#include <queue>

#include "kforest/union_find.hpp"

namespace kforest {

bool forests_acyclic(const MultiGraph& g, const ForestFamily& f) {
  for (int i = 1; i <= f.k(); ++i) {
    UnionFind uf(g.vertex_capacity());
    for (EdgeId e : f.forest_edges(i)) {
      if (!g.edge_alive(e)) return false;
      auto [u, v] = g.endpoints(e);
      if (!uf.unite(u, v)) return false;
    }
  }
  return true;
}

Orientation orient_forests(const MultiGraph& g, const ForestFamily& f) {
  Orientation o(g);
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(g.vertex_capacity());
  std::vector<char> seen(g.vertex_capacity(), 0);

  for (int i = 1; i <= f.k(); ++i) {
    std::vector<EdgeId> edges = f.forest_edges(i);
    std::vector<Vertex> touched;
    for (EdgeId e : edges) {
      if (!g.edge_alive(e)) throw internal_error("orient_forests: dead edge in family");
      auto [u, v] = g.endpoints(e);
      if (adj[u].empty()) touched.push_back(u);
      adj[u].emplace_back(v, e);
      if (adj[v].empty()) touched.push_back(v);
      adj[v].emplace_back(u, e);
    }
    std::sort(touched.begin(), touched.end());

    int oriented = 0;
    for (Vertex root : touched) {
      if (seen[root]) continue;
      // BFS away from the lowest-id vertex of each tree component.
      std::queue<Vertex> q;
      q.push(root);
      seen[root] = 1;
      while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (auto [v, e] : adj[u]) {
          if (seen[v]) continue;
          seen[v] = 1;
          o.orient(g, e, v);
          ++oriented;
          q.push(v);
        }
      }
    }
    if (oriented != static_cast<int>(edges.size()))
      throw internal_error("orient_forests: forest " + std::to_string(i) +
                           " contains a cycle");
    for (Vertex v : touched) {
      adj[v].clear();
      seen[v] = 0;
    }
  }
  return o;
}

}  // namespace kforest
