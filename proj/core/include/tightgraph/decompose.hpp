#pragma once

#include <optional>
#include <vector>

#include "tightgraph/graph.hpp"
#include "tightgraph/sparsity.hpp"

namespace tg {

// Edge-disjoint spanning split of a tight graph:
//   l = 2: T and P are two spanning trees.
//   l = 1: T is a spanning tree, P spans with exactly one cycle per component.
//   l = 3: one extra edge is adjoined first (it may double an existing edge,
//          which is what happens for the complete bases); then T,P are two
//          spanning trees of the enlarged multigraph.
struct Decomposition {
  std::vector<Edge> tree_edges;  // T
  std::vector<Edge> map_edges;   // P
  std::optional<Edge> added_edge;
};

// Partition by matroid-union augmentation (graphic + graphic/bicircular).
// Throws if g is not (2,l)-tight. For l=3 the default added edge is the first
// non-edge in lexicographic order, or a doubled first edge if g is complete.
Decomposition decompose(const SimpleGraph& g, SparsityParams p);
Decomposition decompose(const SimpleGraph& g, SparsityParams p, Edge added);

// Exact check of all Decomposition invariants against g.
bool verify_decomposition(const SimpleGraph& g, const Decomposition& d, SparsityParams p);

}  // namespace tg
