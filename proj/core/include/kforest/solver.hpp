#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kforest/contraction.hpp"
#include "kforest/forest_family.hpp"
#include "kforest/multigraph.hpp"

namespace kforest {

struct IterationRecord {
  int f_before = 0;   // |F| entering the iteration
  int p_size = 0;     // |P| from the pseudoforest step
  int h_size = 0;     // |H| after repacking P into k forests
  int clump_edges = 0;
  int components_contracted = 0;
  int cumulative_after = 0;  // live |F| + edges moved into contraction records
  bool f_subset_of_p = true;
};

struct SolveStats {
  std::vector<IterationRecord> iterations;
  int iteration_count = 0;  // max over connected components
  int flow_calls = 0;
  int total_size = 0;
  std::vector<int> cumulative_trace;
};

// Hard ceiling on main-loop iterations for a graph with n vertices. Derived
// from the geometric deficit shrink (factor k/(k+1) per round, integer
// arithmetic); exceeding it means a subroutine is broken.
int iteration_cap(int n, int k);

// One in-progress solve over a private copy of the graph. step() runs one
// loop body (orient, pseudoforest extension, repack, top clump, contract);
// finish() uncontracts and hands back the family for the original graph.
class SolveState {
 public:
  SolveState(const MultiGraph& g, int k);

  bool done() const { return done_; }
  const IterationRecord& step();
  ForestFamily finish();

  const MultiGraph& graph() const { return g_; }
  const ForestFamily& family() const { return fam_; }
  int contracted_total() const { return contracted_total_; }
  const SolveStats& stats() const { return stats_; }
  int cap() const { return cap_; }

 private:
  MultiGraph g_;
  int k_;
  ForestFamily fam_;
  std::vector<ContractionRecord> records_;
  SolveStats stats_;
  int contracted_total_ = 0;
  int prev_cumulative_ = 0;
  int cap_;
  bool done_ = false;
  bool finished_ = false;
};

// Algorithm entry point: optimal k-forest family plus instrumentation.
// Disconnected inputs are solved per connected component and merged.
std::pair<ForestFamily, SolveStats> forests(const MultiGraph& g, int k);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;
  int size = 0;
  bool optimal_checked = false;
  std::optional<int> optimal;
};

// Checks existence, acyclicity, and disjointness of the family against the
// original graph; with check_optimal, also compares the size against an
// independent optimum (partition certificate when the graph is small enough,
// matroid-union augmentation otherwise).
VerifyReport verify_solution(const MultiGraph& g, const ForestFamily& fam,
                             int k, bool check_optimal = false);

}  // namespace kforest
