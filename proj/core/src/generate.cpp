#include "kforest/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace kforest {

namespace {
constexpr int kMaxRetries = 1000;
}

MultiGraph generate_gnm(int n, int m, std::uint64_t seed) {
  if (n < 1 || m < 0) throw input_error("generate_gnm: bad sizes");
  MultiGraph g(n);
  if (m == 0) return g;
  if (n == 1) throw input_error("generate_gnm: cannot place edges on one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < m; ++i) {
    int u, v;
    int tries = 0;
    do {
      u = pick(rng);
      v = pick(rng);
      if (++tries > kMaxRetries)
        throw input_error("generate_gnm: retries exhausted");
    } while (u == v);
    g.add_edge(u, v);
  }
  return g;
}

MultiGraph generate_ktrees(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw input_error("generate_ktrees: bad sizes");
  MultiGraph g(n);
  if (n == 1) return g;
  if (k > n / 2)
    throw input_error("generate_ktrees: K_n only holds floor(n/2) disjoint "
                      "spanning trees");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> used;
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;

  // Each tree: shuffle the vertices, then attach every vertex to a random
  // earlier one whose pair is still unused (within a tree pairs are fresh
  // automatically since the attached vertex is new). Dead ends reshuffle.
  for (int t = 0; t < k; ++t) {
    std::vector<std::pair<int, int>> tree;
    bool built = false;
    for (int attempt = 0; attempt < kMaxRetries && !built; ++attempt) {
      std::shuffle(perm.begin(), perm.end(), rng);
      tree.clear();
      built = true;
      for (int i = 1; i < n && built; ++i) {
        int u = perm[i];
        int off = std::uniform_int_distribution<int>(0, i - 1)(rng);
        built = false;
        for (int step = 0; step < i; ++step) {
          int v = perm[(off + step) % i];
          if (!used.count({std::min(u, v), std::max(u, v)})) {
            tree.emplace_back(u, v);
            built = true;
            break;
          }
        }
      }
    }
    if (!built)
      throw input_error("generate_ktrees: retries exhausted without an edge-disjoint tree");
    for (auto [u, v] : tree) {
      used.insert({std::min(u, v), std::max(u, v)});
      g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace kforest
