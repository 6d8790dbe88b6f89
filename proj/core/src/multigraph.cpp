#include "kforest/multigraph.hpp"

#include <algorithm>
#include <unordered_map>

#include "kforest/union_find.hpp"

namespace kforest {

MultiGraph::MultiGraph(int n) {
  if (n < 0) throw input_error("negative vertex count");
  vertex_alive_.assign(n, true);
  inc_.resize(n);
  live_vertices_ = n;
}

EdgeId MultiGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw input_error("self-loop rejected at vertex " + std::to_string(u));
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, true});
  inc_[u].push_back(id);
  inc_[v].push_back(id);
  ++live_edges_;
  return id;
}

std::vector<Vertex> MultiGraph::live_vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_vertices_);
  for (Vertex v = 0; v < vertex_capacity(); ++v)
    if (vertex_alive_[v]) out.push_back(v);
  return out;
}

std::vector<EdgeId> MultiGraph::live_edges() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (EdgeId e = 0; e < edge_capacity(); ++e)
    if (edges_[e].alive) out.push_back(e);
  return out;
}

std::vector<EdgeId> MultiGraph::incident_edges(Vertex v) const {
  std::vector<EdgeId> out;
  for_each_incident(v, [&](EdgeId e) { out.push_back(e); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Vertex>> MultiGraph::connected_components() const {
  UnionFind uf(vertex_capacity());
  for (EdgeId e = 0; e < edge_capacity(); ++e)
    if (edges_[e].alive) uf.unite(edges_[e].u, edges_[e].v);
  std::unordered_map<int, int> index;
  std::vector<std::vector<Vertex>> comps;
  for (Vertex v = 0; v < vertex_capacity(); ++v) {
    if (!vertex_alive_[v]) continue;
    int root = uf.find(v);
    auto it = index.find(root);
    if (it == index.end()) {
      it = index.emplace(root, static_cast<int>(comps.size())).first;
      comps.emplace_back();
    }
    comps[it->second].push_back(v);
  }
  return comps;
}

MultiGraph MultiGraph::restricted_to(const std::vector<Vertex>& vs) const {
  MultiGraph out = *this;
  std::vector<char> keep(vertex_capacity(), 0);
  for (Vertex v : vs) {
    check_vertex(v);
    keep[v] = 1;
  }
  for (EdgeId e = 0; e < out.edge_capacity(); ++e) {
    if (!out.edges_[e].alive) continue;
    if (!keep[out.edges_[e].u] || !keep[out.edges_[e].v]) out.kill_edge(e);
  }
  for (Vertex v = 0; v < out.vertex_capacity(); ++v)
    if (out.vertex_alive_[v] && !keep[v]) out.kill_vertex(v);
  return out;
}

void MultiGraph::remap_endpoint(EdgeId e, Vertex from, Vertex to) {
  check_edge(e);
  check_vertex(to);
  EdgeRec& r = edges_[e];
  if (r.u == from) {
    r.u = to;
  } else if (r.v == from) {
    r.v = to;
  } else {
    throw internal_error("remap_endpoint: vertex is not an endpoint");
  }
  if (r.u == r.v) throw internal_error("remap_endpoint would create a self-loop");
  inc_[to].push_back(e);
}

void MultiGraph::restore_endpoint(EdgeId e, bool first_endpoint, Vertex original) {
  check_edge(e);
  EdgeRec& r = edges_[e];
  (first_endpoint ? r.u : r.v) = original;
}

void MultiGraph::kill_edge(EdgeId e) {
  check_edge(e);
  if (!edges_[e].alive) throw internal_error("kill_edge: edge already dead");
  edges_[e].alive = false;
  --live_edges_;
}

void MultiGraph::revive_edge(EdgeId e) {
  check_edge(e);
  if (edges_[e].alive) throw internal_error("revive_edge: edge already alive");
  edges_[e].alive = true;
  ++live_edges_;
}

void MultiGraph::kill_vertex(Vertex v) {
  check_vertex(v);
  vertex_alive_[v] = false;
  --live_vertices_;
}

void MultiGraph::revive_vertex(Vertex v) {
  if (v < 0 || v >= vertex_capacity()) throw input_error("unknown vertex");
  if (vertex_alive_[v]) throw internal_error("revive_vertex: vertex already alive");
  vertex_alive_[v] = true;
  ++live_vertices_;
}

void MultiGraph::trim_incidence(Vertex v, int count) {
  check_vertex(v);
  if (count < 0 || count > static_cast<int>(inc_[v].size()))
    throw internal_error("trim_incidence: bad count");
  inc_[v].resize(inc_[v].size() - count);
}

std::vector<EdgeId> induced_edge_set(const MultiGraph& g,
                                     const std::vector<Vertex>& s,
                                     const std::vector<EdgeId>* restrict_to) {
  std::vector<char> in_s(g.vertex_capacity(), 0);
  for (Vertex v : s) {
    if (!g.vertex_alive(v)) throw input_error("induced_edge_set: unknown vertex");
    in_s[v] = 1;
  }
  std::vector<EdgeId> out;
  auto consider = [&](EdgeId e) {
    if (!g.edge_alive(e)) return;
    auto [u, v] = g.endpoints(e);
    if (in_s[u] && in_s[v]) out.push_back(e);
  };
  if (restrict_to) {
    for (EdgeId e : *restrict_to) consider(e);
  } else {
    for (EdgeId e : g.live_edges()) consider(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int spanning_rank(const MultiGraph& g, const std::vector<EdgeId>& edge_set) {
  UnionFind uf(g.vertex_capacity());
  std::vector<char> touched(g.vertex_capacity(), 0);
  int vertices = 0;
  int rank = 0;
  for (EdgeId e : edge_set) {
    if (!g.edge_alive(e)) throw input_error("spanning_rank: unknown edge id");
    auto [u, v] = g.endpoints(e);
    for (Vertex w : {u, v}) {
      if (!touched[w]) {
        touched[w] = 1;
        ++vertices;
      }
    }
    if (uf.unite(u, v)) ++rank;
  }
  (void)vertices;
  return rank;
}

}  // namespace kforest
