#include "kforest/solver.hpp"

#include <algorithm>

#include "kforest/clump.hpp"
#include "kforest/kforest_exact.hpp"
#include "kforest/orientation.hpp"
#include "kforest/pseudoforest.hpp"
#include "kforest/union_find.hpp"

namespace kforest {

int iteration_cap(int n, int k) {
  if (n < 0 || k < 1) throw input_error("iteration_cap: bad parameters");
  // Steps of x <- floor(k*x/(k+1)) from x = k*n down to 0, plus the final
  // no-change round, plus one of slack.
  long long x = static_cast<long long>(k) * n;
  int steps = 0;
  while (x > 0) {
    x = (static_cast<long long>(k) * x) / (k + 1);
    ++steps;
  }
  return steps + 2;
}

SolveState::SolveState(const MultiGraph& g, int k)
    : g_(g), k_(k), fam_(k), cap_(iteration_cap(g.live_vertex_count(), k)) {}

const IterationRecord& SolveState::step() {
  if (done_ || finished_) throw internal_error("step() after the solve ended");
  if (static_cast<int>(stats_.iterations.size()) >= cap_)
    throw internal_error("solver exceeded the iteration cap; a subroutine is broken");

  IterationRecord rec;
  rec.f_before = fam_.size();

  Orientation oriented = orient_forests(g_, fam_);
  PseudoforestResult pf = pseudoforests(g_, oriented, k_);
  ++stats_.flow_calls;
  rec.p_size = static_cast<int>(pf.edges.size());

  for (EdgeId e : fam_.edges()) {
    if (!pf.orientation.contains(e)) {
      rec.f_subset_of_p = false;
      break;
    }
  }
  if (!rec.f_subset_of_p)
    throw internal_error("pseudoforest extension dropped an edge of F");

  fam_ = bounded_indegree_forests(g_, pf.orientation, k_, &fam_);
  rec.h_size = fam_.size();

  ClumpReport clump = top_clump(g_, fam_);
  stats_.flow_calls += clump.flow_calls;
  rec.clump_edges = static_cast<int>(clump.clump_edges.size());
  rec.components_contracted = static_cast<int>(clump.components.size());
  for (const ClumpComponent& cc : clump.components) {
    ContractionRecord cr = contract(g_, fam_, cc.vertices);
    contracted_total_ +=
        k_ * (static_cast<int>(cr.members.size()) - 1);
    records_.push_back(std::move(cr));
  }

  rec.cumulative_after = fam_.size() + contracted_total_;
  done_ = (rec.cumulative_after == prev_cumulative_);
  prev_cumulative_ = rec.cumulative_after;

  stats_.iterations.push_back(rec);
  stats_.cumulative_trace.push_back(rec.cumulative_after);
  stats_.iteration_count = static_cast<int>(stats_.iterations.size());
  return stats_.iterations.back();
}

ForestFamily SolveState::finish() {
  if (finished_) throw internal_error("finish() called twice");
  finished_ = true;
  uncontract_all(g_, fam_, records_);
  stats_.total_size = fam_.size();
  return std::move(fam_);
}

std::pair<ForestFamily, SolveStats> forests(const MultiGraph& g, int k) {
  if (k < 1) throw input_error("forests: k must be >= 1");

  std::vector<std::vector<Vertex>> comps = g.connected_components();
  ForestFamily merged(k);
  SolveStats stats;

  for (const auto& comp : comps) {
    SolveState st(comps.size() == 1 ? g : g.restricted_to(comp), k);
    while (!st.done()) st.step();
    ForestFamily part = st.finish();
    for (EdgeId e : part.edges()) merged.assign(e, part.forest_of(e));

    const SolveStats& s = st.stats();
    stats.iterations.insert(stats.iterations.end(), s.iterations.begin(),
                            s.iterations.end());
    stats.iteration_count = std::max(stats.iteration_count, s.iteration_count);
    stats.flow_calls += s.flow_calls;
    stats.cumulative_trace.insert(stats.cumulative_trace.end(),
                                  s.cumulative_trace.begin(),
                                  s.cumulative_trace.end());
  }
  stats.total_size = merged.size();
  return {std::move(merged), std::move(stats)};
}

namespace {

// Names the cycle that closing edge `e` completes inside forest `forest`.
std::string describe_cycle(const MultiGraph& g, const ForestFamily& fam,
                           int forest, EdgeId e) {
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(g.vertex_capacity());
  for (EdgeId f : fam.forest_edges(forest)) {
    if (f == e || !g.edge_alive(f)) continue;
    auto [u, v] = g.endpoints(f);
    adj[u].emplace_back(v, f);
    adj[v].emplace_back(u, f);
  }
  auto [src, dst] = g.endpoints(e);
  std::vector<EdgeId> via(g.vertex_capacity(), -1);
  std::vector<Vertex> par(g.vertex_capacity(), -1);
  std::vector<Vertex> stack{src};
  std::vector<char> seen(g.vertex_capacity(), 0);
  seen[src] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (auto [v, f] : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      par[v] = u;
      via[v] = f;
      stack.push_back(v);
    }
  }
  std::vector<EdgeId> cycle{e};
  for (Vertex v = dst; v != src && v != -1; v = par[v]) cycle.push_back(via[v]);
  std::sort(cycle.begin(), cycle.end());
  std::string out = "cycle edges:";
  for (EdgeId f : cycle) out += " " + std::to_string(f);
  return out;
}

}  // namespace

VerifyReport verify_solution(const MultiGraph& g, const ForestFamily& fam,
                             int k, bool check_optimal) {
  VerifyReport report;
  report.size = fam.size();
  auto fail = [&](const std::string& msg) {
    report.ok = false;
    report.failures.push_back(msg);
  };

  if (fam.k() != k) fail("family has k=" + std::to_string(fam.k()) +
                         ", expected " + std::to_string(k));

  for (EdgeId e : fam.edges()) {
    if (!g.edge_alive(e))
      fail("assigned edge " + std::to_string(e) + " does not exist in the graph");
    int forest = fam.forest_of(e);
    if (forest < 1 || forest > k)
      fail("edge " + std::to_string(e) + " assigned to out-of-range forest " +
           std::to_string(forest));
  }

  for (int i = 1; i <= std::min(k, fam.k()); ++i) {
    UnionFind uf(g.vertex_capacity());
    for (EdgeId e : fam.forest_edges(i)) {
      if (!g.edge_alive(e)) continue;
      auto [u, v] = g.endpoints(e);
      if (!uf.unite(u, v)) {
        fail("forest " + std::to_string(i) + " has a cycle; " +
             describe_cycle(g, fam, i, e));
        break;
      }
    }
  }

  if (check_optimal) {
    report.optimal_checked = true;
    int opt = g.live_vertex_count() <= 12
                  ? partition_opt_certificate(g, k).value
                  : solve_kforest(g, k).size();
    report.optimal = opt;
    if (report.ok && fam.size() != opt)
      fail("suboptimal: size " + std::to_string(fam.size()) + " vs optimum " +
           std::to_string(opt));
  }
  return report;
}

}  // namespace kforest
