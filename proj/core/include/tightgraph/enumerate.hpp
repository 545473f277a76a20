#pragma once

#include <map>
#include <string>
#include <vector>

#include "tightgraph/canonical.hpp"
#include "tightgraph/graph.hpp"
#include "tightgraph/sparsity.hpp"

namespace tg {

// Canonical forms per vertex count, each list sorted.
using CorpusByN = std::map<int, std::vector<CanonicalForm>>;

// Closure of the base graphs under all applicable forward moves, truncated at
// n_max and deduplicated by canonical form. Move lists per l:
//   l = 3: Henneberg 1/2 from K2
//   l = 2: plus vertex-to-K4 and edge-to-K3, from K4
//   l = 1: plus edge joining, from K5 minus an edge and the glued K4 pair
CorpusByN generate_by_moves(int n_max, SparsityParams p, int jobs = 1);

// Independent route: all labeled graphs on n vertices with exactly 2n-l
// edges, kept when the pebble game accepts every edge, deduplicated.
// Exhaustive over edge subsets with sparsity pruning; practical to n = 8.
std::vector<CanonicalForm> generate_brute_force(int n, SparsityParams p);

struct CompareReport {
  // n -> (move count, brute count)
  std::map<int, std::pair<long, long>> counts;
  std::vector<std::string> mismatches;  // graph6 of set differences
  bool equal = true;
};

// Both generators over base size <= n <= n_max; sets must coincide.
CompareReport compare_generators(int n_max, SparsityParams p, int jobs = 1);

// Smallest vertex count at which bases exist (2 / 4 / 5 for l = 3 / 2 / 1).
int smallest_base_order(SparsityParams p);

// Decode a whole corpus level into graphs.
std::vector<SimpleGraph> decode_level(const std::vector<CanonicalForm>& forms);

}  // namespace tg
