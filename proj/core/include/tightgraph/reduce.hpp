#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tightgraph/canonical.hpp"
#include "tightgraph/graph.hpp"
#include "tightgraph/moves.hpp"
#include "tightgraph/sparsity.hpp"

namespace tg {

// Irreducible roots of construction sequences.
enum class BaseTag { k2, k4, k5_minus_edge, glued_k4s };

SimpleGraph base_graph(BaseTag tag);
const char* base_tag_name(BaseTag tag);

// The tag whose graph is isomorphic to g among the bases legal for l
// (l=3: K2; l=2: K4; l=1: K5 minus an edge, or two K4s sharing an edge).
std::optional<BaseTag> match_base(const SimpleGraph& g, SparsityParams p);

// One certified reduction: the forward move that rebuilds the input from the
// child graph(s). Joins have two children, everything else one.
struct ReductionStep {
  Move forward;
  std::vector<SimpleGraph> children;
};

// Cheapest-first: inverse Henneberg 1, inverse Henneberg 2, triangle merge,
// K4 contraction (skipped for l=3), edge separation (l=1 only). For a tight
// non-base input a hit is guaranteed; nullopt signals a base graph.
std::optional<ReductionStep> reduce_step(const SimpleGraph& g, SparsityParams p);

// Tree of forward moves rooted at base leaves. Leaves carry the concrete
// labeled base graph the reduction ended at, so replay is deterministic;
// every node records the canonical hash of its graph.
struct ConstructionNode {
  // leaf
  std::optional<BaseTag> base;
  std::optional<SimpleGraph> leaf_graph;
  // internal
  std::optional<Move> move;
  std::unique_ptr<ConstructionNode> child;   // unary moves and join left
  std::unique_ptr<ConstructionNode> right;   // join right
  std::uint64_t hash = 0;
  int n = 0;
};

struct ConstructionSequence {
  int l = 1;
  std::unique_ptr<ConstructionNode> root;
};

// Full certificate: every node's graph is tight, leaves are bases, and the
// root replays to a graph isomorphic to the input. Throws on non-tight input
// (naming a violating subgraph) and on the never-expected case of a tight
// non-base graph with no reduction.
ConstructionSequence deconstruct(const SimpleGraph& g, SparsityParams p);

// Rebuild the root graph, re-verifying every node (tightness, move legality,
// recorded hashes). Throws with the offending node's preorder index.
SimpleGraph replay(const ConstructionSequence& seq);

std::string certificate_to_json(const ConstructionSequence& seq);
ConstructionSequence certificate_from_json(std::string_view text);

}  // namespace tg
