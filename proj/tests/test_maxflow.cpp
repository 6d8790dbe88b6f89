#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kforest/maxflow.hpp"

using namespace kforest;

namespace {

struct RandArc {
  int tail, head, cap, id;
};

// Exhaustive min-cut oracle: min over all s/t-separating node subsets of the
// total capacity leaving the source side. Only for tiny networks.
std::int64_t min_cut_oracle(int n, int s, int t,
                            const std::vector<RandArc>& arcs) {
  std::int64_t best = -1;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (!(mask & (1 << s)) || (mask & (1 << t))) continue;
    std::int64_t cut = 0;
    for (const auto& a : arcs)
      if ((mask & (1 << a.tail)) && !(mask & (1 << a.head))) cut += a.cap;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

}  // namespace

TEST_CASE("diamond network") {
  // s=0, a=1, b=2, t=3.
  FlowNetwork net(4, 0, 3);
  std::vector<RandArc> arcs{{0, 1, 2, 0}, {0, 2, 2, 0}, {1, 3, 1, 0},
                            {2, 3, 1, 0}, {1, 2, 1, 0}};
  for (auto& a : arcs) a.id = net.add_arc(a.tail, a.head, a.cap);
  CHECK(net.max_flow() == 2);
  CHECK(net.max_flow() == 2);  // idempotent
  CHECK(min_cut_oracle(4, 0, 3, arcs) == 2);
  // Flow conservation and capacity respected.
  std::vector<std::int64_t> excess(4, 0);
  for (const auto& a : arcs) {
    int fl = net.flow_on(a.id);
    CHECK(fl >= 0);
    CHECK(fl <= a.cap);
    excess[a.tail] -= fl;
    excess[a.head] += fl;
  }
  CHECK(excess[0] == -2);
  CHECK(excess[1] == 0);
  CHECK(excess[2] == 0);
  CHECK(excess[3] == 2);
}

TEST_CASE("preloaded feasible flow is kept and extended") {
  FlowNetwork net(4, 0, 3);
  int sa = net.add_arc(0, 1, 2);
  int sb = net.add_arc(0, 2, 2);
  int at = net.add_arc(1, 3, 1);
  int bt = net.add_arc(2, 3, 1);
  net.add_arc(1, 2, 1);
  net.preload(sa, 1);
  net.preload(at, 1);
  CHECK(net.max_flow() == 2);
  CHECK(net.flow_on(sa) == 1);
  CHECK(net.flow_on(at) == 1);
  CHECK(net.flow_on(sb) == 1);
  CHECK(net.flow_on(bt) == 1);
}

TEST_CASE("preload beyond capacity is rejected") {
  FlowNetwork net(2, 0, 1);
  int a = net.add_arc(0, 1, 1);
  CHECK_THROWS_AS(net.preload(a, 2), input_error);
}

TEST_CASE("non-conserving preload is rejected at solve time") {
  FlowNetwork net(3, 0, 2);
  int sa = net.add_arc(0, 1, 2);
  net.add_arc(1, 2, 2);
  net.preload(sa, 1);  // flow enters node 1 but never leaves
  CHECK_THROWS_AS(net.max_flow(), input_error);
}

TEST_CASE("forbidding a residual direction pins preloaded flow") {
  // Two parallel unit routes s->a->t, s->b->t, plus a cheap bypass that
  // would normally win. Preload the a-route and forbid cancelling s->a.
  FlowNetwork net(4, 0, 3);
  int sa = net.add_arc(0, 1, 1);
  int at = net.add_arc(1, 3, 1);
  int sb = net.add_arc(0, 2, 1);
  int bt = net.add_arc(2, 3, 1);
  net.preload(sa, 1);
  net.preload(at, 1);
  net.forbid_residual_reverse(sa);
  CHECK(net.max_flow() == 2);
  CHECK(net.flow_on(sa) == 1);  // could not be cancelled
  CHECK(net.flow_on(sb) == 1);
  CHECK(net.flow_on(bt) == 1);
}

TEST_CASE("forbidden reverse can reduce the achievable value") {
  // s->a (cap 2), a->t (cap 1), a->b (cap 1), b->t forbidden reroute check:
  // preload s->a->b, then b has no way out except b->t cap 0... use a direct
  // construction: s->a cap 1 preloaded into a dead end that only unwinding
  // could fix.
  FlowNetwork net(5, 0, 4);
  int sa = net.add_arc(0, 1, 1);
  int ab = net.add_arc(1, 2, 1);
  int bt = net.add_arc(2, 4, 1);
  int ac = net.add_arc(1, 3, 1);
  int ct = net.add_arc(3, 4, 1);
  net.add_arc(0, 1, 1);  // second s->a unit
  // Preload the full path s->a->b->t.
  net.preload(sa, 1);
  net.preload(ab, 1);
  net.preload(bt, 1);
  net.forbid_residual_reverse(sa);
  net.forbid_residual_reverse(ab);
  net.forbid_residual_reverse(bt);
  CHECK(net.max_flow() == 2);
  CHECK(net.flow_on(ac) == 1);
  CHECK(net.flow_on(ct) == 1);
}

TEST_CASE("min cut source side is the maximal one") {
  // s -0- a -1- t with both caps 1: every cut is minimum; the maximal
  // source side is {s,a}.
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 1);
  net.add_arc(1, 2, 1);
  net.max_flow();
  CHECK(net.min_cut_source_side() == std::vector<int>{0, 1});
}

TEST_CASE("min cut source side on the diamond") {
  FlowNetwork net(4, 0, 3);
  net.add_arc(0, 1, 2);
  net.add_arc(0, 2, 2);
  net.add_arc(1, 3, 1);
  net.add_arc(2, 3, 1);
  net.add_arc(1, 2, 1);
  net.max_flow();
  // a and b cannot reach t in the residual (their t-arcs are saturated and
  // nothing downstream has slack), so the maximal source side is {s,a,b}.
  CHECK(net.min_cut_source_side() == std::vector<int>{0, 1, 2});
}

TEST_CASE("zero-capacity sink arcs put everything on the source side") {
  FlowNetwork net(3, 0, 2);
  net.add_arc(0, 1, 5);
  net.add_arc(1, 2, 0);
  CHECK(net.max_flow() == 0);
  CHECK(net.min_cut_source_side() == std::vector<int>{0, 1});
}

TEST_CASE("randomized networks agree with the cut-enumeration oracle") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);  // 4..8 nodes
    int s = 0, t = n - 1;
    int m = 3 + static_cast<int>(rng() % 14);
    std::vector<RandArc> arcs;
    FlowNetwork net(n, s, t);
    for (int i = 0; i < m; ++i) {
      int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % n);
      if (u == v) continue;
      int cap = static_cast<int>(rng() % 4);
      RandArc a{u, v, cap, 0};
      a.id = net.add_arc(u, v, cap);
      arcs.push_back(a);
    }
    std::int64_t oracle = min_cut_oracle(n, s, t, arcs);
    std::int64_t got = net.max_flow();
    CHECK(got == oracle);
    // Cut value of the reported source side equals the flow value.
    std::vector<int> side = net.min_cut_source_side();
    std::vector<char> in_side(n, 0);
    for (int v : side) in_side[v] = 1;
    CHECK(in_side[s] == 1);
    CHECK(in_side[t] == 0);
    std::int64_t cut = 0;
    for (const auto& a : arcs)
      if (in_side[a.tail] && !in_side[a.head]) cut += a.cap;
    CHECK(cut == got);
    // Maximality: every node outside the side reaches t via residual arcs,
    // which the library established; spot-check that side is downward closed
    // under residual reachability from s would be redundant; instead check
    // no strictly larger source set also has cut value == flow by adding
    // each single outside node (cheap necessary condition of maximality).
    for (int v = 0; v < n; ++v) {
      if (in_side[v] || v == t) continue;
      in_side[v] = 1;
      std::int64_t cut2 = 0;
      for (const auto& a : arcs)
        if (in_side[a.tail] && !in_side[a.head]) cut2 += a.cap;
      CHECK(cut2 > got);
      in_side[v] = 0;
    }
  }
}

TEST_CASE("flow_on before solving reports preloaded amounts") {
  FlowNetwork net(2, 0, 1);
  int a = net.add_arc(0, 1, 3);
  net.preload(a, 2);
  CHECK(net.flow_on(a) == 2);
}

TEST_CASE("min_cut_source_side requires a finished solve") {
  FlowNetwork net(2, 0, 1);
  net.add_arc(0, 1, 1);
  CHECK_THROWS_AS(net.min_cut_source_side(), input_error);
}
