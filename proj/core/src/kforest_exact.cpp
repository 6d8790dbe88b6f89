#include "kforest/kforest_exact.hpp"

#include <algorithm>
#include <limits>

#include "kforest/union_find.hpp"

namespace kforest {

ExchangeState::ExchangeState(const MultiGraph& g, int k)
    : ExchangeState(g, k, g.live_edges()) {}

ExchangeState::ExchangeState(const MultiGraph& g, int k,
                             const std::vector<EdgeId>& allowed)
    : g_(&g), k_(k), allowed_(g.edge_capacity(), 0), fam_(k),
      dead_(g.vertex_capacity()) {
  for (EdgeId e : allowed) {
    if (!g.edge_alive(e)) throw input_error("exchange state: dead edge in edge set");
    allowed_[e] = 1;
  }
  uf_.assign(k_, UnionFind(g.vertex_capacity()));
  uf_dirty_.assign(k_, 0);
  par_v_.assign(k_, std::vector<Vertex>(g.vertex_capacity()));
  par_e_.assign(k_, std::vector<EdgeId>(g.vertex_capacity(), -1));
  depth_.assign(k_, std::vector<int>(g.vertex_capacity(), 0));
  rooted_dirty_.assign(k_, 1);
  pred_.assign(g.edge_capacity(), kUnlabeled);
  jump_.assign(k_, {});
  for (int i = 0; i < k_; ++i) {
    std::iota(par_v_[i].begin(), par_v_[i].end(), 0);
    jump_[i].resize(g.vertex_capacity());
    std::iota(jump_[i].begin(), jump_[i].end(), 0);
  }
}

void ExchangeState::seed(const ForestFamily& f) {
  if (f.k() != k_) throw input_error("seed family has a different k");
  ForestFamily fresh(k_);
  std::vector<UnionFind> check(k_, UnionFind(g_->vertex_capacity()));
  for (EdgeId e : f.edges()) {
    if (e >= g_->edge_capacity() || !g_->edge_alive(e) || !allowed_[e])
      throw input_error("seed family uses an edge outside the edge set");
    auto [u, v] = g_->endpoints(e);
    int forest = f.forest_of(e);
    if (!check[forest - 1].unite(u, v))
      throw input_error("seed family has a cycle in forest " +
                        std::to_string(forest));
    fresh.assign(e, forest);
  }
  fam_ = std::move(fresh);
  dead_.reset();  // spanned-region knowledge was relative to the old family
  std::fill(uf_dirty_.begin(), uf_dirty_.end(), 1);
  std::fill(rooted_dirty_.begin(), rooted_dirty_.end(), 1);
}

void ExchangeState::ensure_uf(int i) {
  if (!uf_dirty_[i]) return;
  uf_[i].reset();
  for (EdgeId e : fam_.forest_edges(i + 1)) {
    auto [u, v] = g_->endpoints(e);
    uf_[i].unite(u, v);
  }
  uf_dirty_[i] = 0;
}

void ExchangeState::ensure_rooted(int i) {
  if (!rooted_dirty_[i]) return;
  std::iota(par_v_[i].begin(), par_v_[i].end(), 0);
  std::fill(par_e_[i].begin(), par_e_[i].end(), -1);
  std::fill(depth_[i].begin(), depth_[i].end(), 0);

  std::vector<EdgeId> edges = fam_.forest_edges(i + 1);
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(g_->vertex_capacity());
  std::vector<Vertex> touched;
  for (EdgeId e : edges) {
    auto [u, v] = g_->endpoints(e);
    if (adj[u].empty()) touched.push_back(u);
    adj[u].emplace_back(v, e);
    if (adj[v].empty()) touched.push_back(v);
    adj[v].emplace_back(u, e);
  }
  std::sort(touched.begin(), touched.end());
  std::vector<char> seen(g_->vertex_capacity(), 0);
  std::vector<Vertex> stack;
  for (Vertex root : touched) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto [v, e] : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        par_v_[i][v] = u;
        par_e_[i][v] = e;
        depth_[i][v] = depth_[i][u] + 1;
        stack.push_back(v);
      }
    }
  }
  rooted_dirty_[i] = 0;
}

Vertex ExchangeState::jump_find(int i, Vertex v) {
  while (jump_[i][v] != v) {
    jump_[i][v] = jump_[i][jump_[i][v]];
    v = jump_[i][v];
  }
  return v;
}

void ExchangeState::jump_skip(int i, Vertex v, Vertex parent) {
  if (jump_[i][v] == v) touched_jump_.emplace_back(i, v);
  jump_[i][v] = parent;
}

void ExchangeState::label_path(int i, EdgeId from, Vertex x, Vertex y,
                               std::queue<EdgeId>& q) {
  Vertex a = jump_find(i, x);
  Vertex b = jump_find(i, y);
  std::vector<EdgeId> fresh;
  while (a != b) {
    if (depth_[i][a] < depth_[i][b]) std::swap(a, b);
    EdgeId pe = par_e_[i][a];
    if (pe < 0)
      throw internal_error("label_path: endpoints not in one tree component");
    if (pred_[pe] == kUnlabeled) fresh.push_back(pe);
    Vertex pv = par_v_[i][a];
    jump_skip(i, a, pv);
    a = jump_find(i, pv);
  }
  // Deterministic tie-break: cycle edges enter the queue ascending by id.
  std::sort(fresh.begin(), fresh.end());
  for (EdgeId pe : fresh) {
    pred_[pe] = from;
    touched_edges_.push_back(pe);
    q.push(pe);
  }
}

void ExchangeState::apply_chain(EdgeId last, int target_forest) {
  int chain_len = 0;
  std::vector<int> dirty;
  int tgt = target_forest;
  EdgeId c = last;
  Vertex fx, fy;
  std::tie(fx, fy) = g_->endpoints(last);
  for (;;) {
    ++chain_len;
    int old = fam_.assigned(c) ? fam_.forest_of(c) - 1 : -1;
    if (old >= 0) fam_.reassign(c, tgt + 1);
    else fam_.assign(c, tgt + 1);
    dirty.push_back(tgt);
    rooted_dirty_[tgt] = 1;
    if (old < 0) break;
    dirty.push_back(old);
    rooted_dirty_[old] = 1;
    tgt = old;
    c = pred_[c];
  }
  if (chain_len == 1) {
    // Plain insert: the component structure only merges.
    if (!uf_dirty_[target_forest]) uf_[target_forest].unite(fx, fy);
  } else {
    for (int i : dirty) uf_dirty_[i] = 1;
  }
}

void ExchangeState::clear_scratch() {
  for (EdgeId e : touched_edges_) pred_[e] = kUnlabeled;
  touched_edges_.clear();
  for (auto [i, v] : touched_jump_) jump_[i][v] = v;
  touched_jump_.clear();
}

bool ExchangeState::augment_edge(EdgeId e) {
  if (e < 0 || e >= g_->edge_capacity() || !g_->edge_alive(e) || !allowed_[e])
    throw input_error("augment_edge: edge outside the working edge set");
  if (fam_.assigned(e)) throw input_error("augment_edge: edge already assigned");

  auto [eu, ev] = g_->endpoints(e);
  if (dead_.same(eu, ev)) return false;

  pred_[e] = kRoot;
  touched_edges_.push_back(e);
  std::queue<EdgeId> q;
  q.push(e);
  bool grown = false;
  while (!q.empty() && !grown) {
    EdgeId f = q.front();
    q.pop();
    auto [x, y] = g_->endpoints(f);
    int cur = fam_.assigned(f) ? fam_.forest_of(f) - 1 : -1;
    for (int i = 0; i < k_; ++i) {
      if (i == cur) continue;
      ensure_uf(i);
      if (!uf_[i].same(x, y)) {
        apply_chain(f, i);
        grown = true;
        break;
      }
      ensure_rooted(i);
      label_path(i, f, x, y, q);
    }
  }
  if (!grown) {
    // The labeled edges span the witness region that blocks e; remember it.
    for (EdgeId f : touched_edges_) {
      auto [x, y] = g_->endpoints(f);
      dead_.unite(eu, x);
      dead_.unite(eu, y);
    }
  }
  clear_scratch();
  return grown;
}

ForestFamily solve_kforest(const MultiGraph& g, int k,
                           const ForestFamily* seed) {
  return solve_kforest_on(g, k, g.live_edges(), seed);
}

ForestFamily solve_kforest_on(const MultiGraph& g, int k,
                              const std::vector<EdgeId>& allowed,
                              const ForestFamily* seed) {
  ExchangeState st(g, k, allowed);
  if (seed) st.seed(*seed);
  std::vector<EdgeId> order(allowed);
  std::sort(order.begin(), order.end());
  for (EdgeId e : order)
    if (!st.family().assigned(e)) st.augment_edge(e);
  return st.take();
}

ForestFamily bounded_indegree_forests(const MultiGraph& g, const Orientation& o,
                                      int k, const ForestFamily* seed) {
  if (k < 1) throw input_error("bounded_indegree_forests: k must be >= 1");
  for (Vertex v = 0; v < g.vertex_capacity(); ++v) {
    if (o.indegree(v) > k)
      throw input_error("bounded_indegree_forests: indegree bound violated at vertex " +
                        std::to_string(v) +
                        " (the active-bound problem is unsupported)");
  }
  for (EdgeId e : o.edges())
    if (!g.edge_alive(e))
      throw input_error("bounded_indegree_forests: dead edge in orientation");
  return solve_kforest_on(g, k, o.edges(), seed);
}

namespace {

struct PartitionSearch {
  int n, k;
  std::vector<std::vector<int>> cnt;  // parallel edge counts
  std::vector<int> label;
  std::vector<int> best_label;
  int best = std::numeric_limits<int>::max();

  void rec(int j, int parts, int crossing) {
    if (crossing >= best) return;
    if (j == n) {
      int value = crossing + k * (n - parts);
      if (value < best) {
        best = value;
        best_label = label;
      }
      return;
    }
    for (int p = 0; p <= parts; ++p) {
      int add = 0;
      for (int w = 0; w < j; ++w)
        if (label[w] != p) add += cnt[j][w];
      label[j] = p;
      rec(j + 1, parts + (p == parts ? 1 : 0), crossing + add);
    }
    label[j] = -1;
  }
};

}  // namespace

PartitionCertificate partition_opt_certificate(const MultiGraph& g, int k) {
  if (k < 1) throw input_error("partition_opt_certificate: k must be >= 1");
  std::vector<Vertex> vs = g.live_vertices();
  const int n = static_cast<int>(vs.size());
  if (n > 12)
    throw input_error("partition_opt_certificate: more than 12 vertices");
  if (n == 0) return {0, {}};

  std::vector<int> index(g.vertex_capacity(), -1);
  for (int i = 0; i < n; ++i) index[vs[i]] = i;

  PartitionSearch ps;
  ps.n = n;
  ps.k = k;
  ps.cnt.assign(n, std::vector<int>(n, 0));
  ps.label.assign(n, -1);
  for (EdgeId e : g.live_edges()) {
    auto [u, v] = g.endpoints(e);
    ++ps.cnt[index[u]][index[v]];
    ++ps.cnt[index[v]][index[u]];
  }
  ps.rec(0, 0, 0);

  int parts = *std::max_element(ps.best_label.begin(), ps.best_label.end()) + 1;
  std::vector<std::vector<Vertex>> witness(parts);
  for (int i = 0; i < n; ++i) witness[ps.best_label[i]].push_back(vs[i]);
  return {ps.best, witness};
}

}  // namespace kforest
