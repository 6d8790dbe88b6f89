#pragma once

#include <cstdint>

#include "kforest/multigraph.hpp"

namespace kforest {

// Uniform multigraph with exactly m edges (parallel edges allowed,
// self-loops redrawn). Deterministic per seed.
MultiGraph generate_gnm(int n, int m, std::uint64_t seed);

// Union of k random edge-disjoint spanning trees on n vertices
// (m = k*(n-1)); the optimum is k*(n-1) by construction. Requires
// k <= n/2. A tree that dead-ends on already-used vertex pairs is redrawn
// a bounded number of times; exhausting the retries raises input_error.
MultiGraph generate_ktrees(int n, int k, std::uint64_t seed);

}  // namespace kforest
