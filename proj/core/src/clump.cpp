#include "kforest/clump.hpp"

#include <algorithm>

#include "kforest/maxflow.hpp"
#include "kforest/orientation.hpp"
#include "kforest/union_find.hpp"

namespace kforest {

std::vector<Vertex> tight_set_from_root(const MultiGraph& g,
                                        const ForestFamily& f,
                                        const std::vector<Vertex>& component,
                                        Vertex r, int* flow_calls) {
  if (std::find(component.begin(), component.end(), r) == component.end())
    throw input_error("tight_set_from_root: root not in component");
  const int k = f.k();

  std::vector<EdgeId> all_f = f.edges();
  std::vector<EdgeId> fedges = induced_edge_set(g, component, &all_f);
  const int ec = static_cast<int>(fedges.size());
  const int nc = static_cast<int>(component.size());

  // Nodes: s, one per F-edge, one per component vertex, t.
  const int s = 0;
  const int t = ec + nc + 1;
  FlowNetwork net(ec + nc + 2, s, t);
  std::vector<int> vnode(g.vertex_capacity(), -1);
  for (int j = 0; j < nc; ++j) vnode[component[j]] = 1 + ec + j;

  std::vector<int> src_arc(ec), ua_arc(ec), va_arc(ec);
  for (int i = 0; i < ec; ++i) {
    auto [u, v] = g.endpoints(fedges[i]);
    src_arc[i] = net.add_arc(s, 1 + i, 1);
    ua_arc[i] = net.add_arc(1 + i, vnode[u], 1);
    va_arc[i] = net.add_arc(1 + i, vnode[v], 1);
  }
  std::vector<int> sink_arc(nc);
  for (int j = 0; j < nc; ++j)
    sink_arc[j] = net.add_arc(1 + ec + j, t, component[j] == r ? 0 : k);

  // Warm start: orient every forest away from r (or, for trees not holding
  // r, away from their own lowest vertex). That flow is already maximal, so
  // the search below only has to confirm it.
  {
    ForestFamily local(k);
    for (EdgeId e : fedges) local.assign(e, f.forest_of(e));
    // Re-rooting at r: orient_forests roots at the lowest id, which need
    // not be r. Orient manually per forest with r preferred as root.
    std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(g.vertex_capacity());
    std::vector<int> eidx(g.edge_capacity(), -1);
    for (int i = 0; i < ec; ++i) eidx[fedges[i]] = i;
    for (int fi = 1; fi <= k; ++fi) {
      for (Vertex v : component) adj[v].clear();
      for (EdgeId e : local.forest_edges(fi)) {
        auto [u, v] = g.endpoints(e);
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
      }
      std::vector<char> seen(g.vertex_capacity(), 0);
      std::vector<Vertex> roots;
      roots.push_back(r);
      for (Vertex v : component) roots.push_back(v);
      std::vector<Vertex> stack;
      for (Vertex root : roots) {
        if (seen[root]) continue;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
          Vertex u = stack.back();
          stack.pop_back();
          for (auto [v, e] : adj[u]) {
            if (seen[v]) continue;
            seen[v] = 1;
            int i = eidx[e];
            net.preload(src_arc[i], 1);
            auto [a, b] = g.endpoints(e);
            net.preload(v == a ? ua_arc[i] : va_arc[i], 1);
            net.preload(sink_arc[vnode[v] - 1 - ec], 1);
            stack.push_back(v);
          }
        }
      }
    }
  }

  std::int64_t value = net.max_flow();
  if (flow_calls) ++*flow_calls;
  if (value != ec)
    throw internal_error("tight_set_from_root: flow below the F-edge count");

  std::vector<int> side = net.min_cut_source_side();
  std::vector<Vertex> a;
  for (int node : side)
    if (node > ec && node < t) a.push_back(component[node - 1 - ec]);
  if (std::find(a.begin(), a.end(), r) == a.end())
    throw internal_error("tight_set_from_root: root missing from cut side");
  std::sort(a.begin(), a.end());

  std::vector<EdgeId> inside = induced_edge_set(g, a, &all_f);
  if (static_cast<int>(inside.size()) != k * (static_cast<int>(a.size()) - 1))
    throw internal_error("tight_set_from_root: extracted set is not tight");
  return a;
}

ClumpReport top_clump(const MultiGraph& g, const ForestFamily& f) {
  if (!forests_acyclic(g, f)) throw input_error("top_clump: family is not a forest family");
  const int k = f.k();
  ClumpReport report;

  // F-components and F-degrees.
  UnionFind uf(g.vertex_capacity());
  std::vector<int> fdeg(g.vertex_capacity(), 0);
  std::vector<EdgeId> all_f = f.edges();
  for (EdgeId e : all_f) {
    auto [u, v] = g.endpoints(e);
    uf.unite(u, v);
    ++fdeg[u];
    ++fdeg[v];
  }
  std::vector<std::vector<Vertex>> comps(g.vertex_capacity());
  for (Vertex v = 0; v < g.vertex_capacity(); ++v)
    if (g.vertex_alive(v) && fdeg[v] > 0) comps[uf.find(v)].push_back(v);

  std::vector<char> claimed(g.vertex_capacity(), 0);
  for (const auto& comp : comps) {
    if (comp.size() < 2) continue;
    for (Vertex r : comp) {
      if (claimed[r]) continue;
      // A vertex inside a tight set of size >= 2 has F-degree >= k there;
      // low-degree roots can only yield singletons.
      if (fdeg[r] < k) continue;
      std::vector<Vertex> a =
          tight_set_from_root(g, f, comp, r, &report.flow_calls);
      for (Vertex v : a) claimed[v] = 1;
      if (a.size() < 2) continue;

      ClumpComponent cc;
      cc.vertices = a;
      cc.edges = induced_edge_set(g, a, &all_f);
      cc.trees.assign(k, {});
      for (EdgeId e : cc.edges) cc.trees[f.forest_of(e) - 1].push_back(e);
      const int want = static_cast<int>(a.size()) - 1;
      for (int i = 0; i < k; ++i) {
        if (static_cast<int>(cc.trees[i].size()) != want ||
            spanning_rank(g, cc.trees[i]) != want)
          throw internal_error("top_clump: component trees fail the recount");
      }
      report.clump_edges.insert(report.clump_edges.end(), cc.edges.begin(),
                                cc.edges.end());
      report.components.push_back(std::move(cc));
    }
  }
  std::sort(report.clump_edges.begin(), report.clump_edges.end());
  return report;
}

std::vector<EdgeId> brute_force_top_clump(const MultiGraph& g,
                                          const ForestFamily& f) {
  std::vector<Vertex> vs = g.live_vertices();
  const int n = static_cast<int>(vs.size());
  if (n > 10) throw input_error("brute_force_top_clump: more than 10 vertices");
  const int k = f.k();
  std::vector<EdgeId> all_f = f.edges();

  std::vector<char> in_l(g.edge_capacity(), 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(vs[i]);
    std::vector<EdgeId> inside = induced_edge_set(g, s, &all_f);
    if (static_cast<int>(inside.size()) != k * (static_cast<int>(s.size()) - 1))
      continue;
    for (EdgeId e : inside) in_l[e] = 1;
  }
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_capacity(); ++e)
    if (in_l[e]) out.push_back(e);
  return out;
}

bool is_clump(const MultiGraph& g, const ForestFamily& f,
              const std::vector<EdgeId>& l) {
  for (EdgeId e : l)
    if (!f.assigned(e)) throw input_error("is_clump: edge not in F");
  return static_cast<int>(l.size()) == f.k() * spanning_rank(g, l);
}

}  // namespace kforest
