#include "kforest/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace kforest {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : adj_(node_count), source_(source), sink_(sink) {
  if (node_count < 2 || source < 0 || source >= node_count || sink < 0 ||
      sink >= node_count || source == sink)
    throw input_error("flow network: bad source/sink/node count");
}

int FlowNetwork::add_arc(int tail, int head, int capacity) {
  if (tail < 0 || tail >= node_count() || head < 0 || head >= node_count())
    throw input_error("flow network: arc endpoint out of range");
  if (capacity < 0) throw input_error("flow network: negative capacity");
  int id = static_cast<int>(arcs_.size());
  arcs_.push_back({head, capacity, 0, false});
  arcs_.push_back({tail, 0, 0, false});
  adj_[tail].push_back(id);
  adj_[head].push_back(id + 1);
  solved_ = false;
  return id;
}

void FlowNetwork::preload(int arc, int amount) {
  if (arc < 0 || arc >= static_cast<int>(arcs_.size()) || (arc & 1))
    throw input_error("flow network: bad arc id");
  Arc& fwd = arcs_[arc];
  Arc& rev = arcs_[arc ^ 1];
  if (fwd.flow + amount < 0 || fwd.flow + amount > fwd.cap)
    throw input_error("flow network: preload exceeds arc bounds");
  fwd.flow += amount;
  rev.flow -= amount;
  solved_ = false;
}

void FlowNetwork::forbid_residual_reverse(int arc) {
  if (arc < 0 || arc >= static_cast<int>(arcs_.size()) || (arc & 1))
    throw input_error("flow network: bad arc id");
  arcs_[arc ^ 1].forbidden = true;
  solved_ = false;
}

int FlowNetwork::flow_on(int arc) const {
  if (arc < 0 || arc >= static_cast<int>(arcs_.size()) || (arc & 1))
    throw input_error("flow network: bad arc id");
  return arcs_[arc].flow;
}

void FlowNetwork::check_preload_feasible() const {
  std::vector<std::int64_t> excess(node_count(), 0);
  for (int a = 0; a < static_cast<int>(arcs_.size()); a += 2) {
    const Arc& fwd = arcs_[a];
    const Arc& rev = arcs_[a ^ 1];
    excess[fwd.to] += fwd.flow;
    excess[rev.to] -= fwd.flow;
  }
  for (int v = 0; v < node_count(); ++v) {
    if (v == source_ || v == sink_) continue;
    if (excess[v] != 0)
      throw input_error("flow network: preloaded flow violates conservation at node " +
                        std::to_string(v));
  }
}

bool FlowNetwork::build_levels() {
  level_.assign(node_count(), -1);
  std::queue<int> q;
  level_[source_] = 0;
  q.push(source_);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int a : adj_[u]) {
      int v = arcs_[a].to;
      if (level_[v] == -1 && residual(a) > 0) {
        level_[v] = level_[u] + 1;
        q.push(v);
      }
    }
  }
  return level_[sink_] != -1;
}

std::int64_t FlowNetwork::max_flow() {
  check_preload_feasible();
  std::int64_t total = 0;
  for (int a : adj_[source_]) {
    if ((a & 1) == 0) total += arcs_[a].flow;
    else total -= arcs_[a ^ 1].flow;
  }

  std::vector<int> path;  // arc ids along the current s-path
  while (build_levels()) {
    it_.assign(node_count(), 0);
    path.clear();
    int u = source_;
    for (;;) {
      if (u == sink_) {
        int bottleneck = std::numeric_limits<int>::max();
        for (int a : path) bottleneck = std::min(bottleneck, residual(a));
        for (int a : path) {
          arcs_[a].flow += bottleneck;
          arcs_[a ^ 1].flow -= bottleneck;
        }
        total += bottleneck;
        // Retreat to the first saturated arc on the path.
        std::size_t cut = 0;
        while (cut < path.size() && residual(path[cut]) > 0) ++cut;
        path.resize(cut);
        u = path.empty() ? source_ : arcs_[path.back()].to;
        continue;
      }
      bool advanced = false;
      for (int& i = it_[u]; i < static_cast<int>(adj_[u].size()); ++i) {
        int a = adj_[u][i];
        int v = arcs_[a].to;
        if (residual(a) > 0 && level_[v] == level_[u] + 1) {
          path.push_back(a);
          u = v;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      // Dead end: drop u from this phase and retreat.
      level_[u] = -1;
      if (path.empty()) break;
      path.pop_back();
      u = path.empty() ? source_ : arcs_[path.back()].to;
    }
  }
  solved_ = true;
  value_ = total;
  return total;
}

std::vector<int> FlowNetwork::min_cut_source_side() const {
  if (!solved_)
    throw input_error("flow network: min cut requested before max_flow");
  // Reverse reachability to the sink over residual arcs.
  std::vector<char> reaches_t(node_count(), 0);
  std::queue<int> q;
  reaches_t[sink_] = 1;
  q.push(sink_);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int a : adj_[v]) {
      // The partner arc a^1 runs arcs_[a].to -> v.
      int u = arcs_[a].to;
      if (!reaches_t[u] && residual(a ^ 1) > 0) {
        reaches_t[u] = 1;
        q.push(u);
      }
    }
  }
  if (reaches_t[source_])
    throw internal_error("flow network: source reaches sink after max_flow");
  std::vector<int> side;
  for (int v = 0; v < node_count(); ++v)
    if (!reaches_t[v]) side.push_back(v);
  return side;
}

}  // namespace kforest
