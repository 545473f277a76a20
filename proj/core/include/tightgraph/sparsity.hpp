#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tightgraph/graph.hpp"

namespace tg {

// The pair (k,l) of the sparsity counts. The public surface fixes k = 2 and
// l in {1,2,3}; the pebble engine underneath works for any k <= 4, l < 2k.
struct SparsityParams {
  int k = 2;
  int l = 2;
  explicit SparsityParams(int ell) : l(ell) {
    if (ell < 1 || ell > 3) throw std::invalid_argument("l must be 1, 2 or 3");
  }
};

// Orientation-plus-pebbles state of the (k,l) pebble game.
// Invariants (checked when asserts are enabled):
//   0 <= pebbles(v) <= k,  pebbles(v) + out_degree(v) == k,
//   total pebbles == k*n - accepted edges.
class PebbleState {
 public:
  PebbleState(int n, int k);

  int pebbles(Vertex v) const { return pebbles_[v]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[v].size()); }
  int accepted_edges() const { return accepted_; }

  // Accept edge uv if l+1 pebbles can be gathered on {u,v}; returns false
  // (state still valid) when the edge would break (k,l)-sparsity.
  bool insert_edge(Vertex u, Vertex v, int l);

  // Move pebbles until u,v jointly hold `need`, or report impossibility.
  // Leaves the state equivalent (same accepted edge set, reoriented).
  bool gather(Vertex u, Vertex v, int need);

  void check_invariants() const;

 private:
  bool pull_pebble(Vertex src, Vertex other);

  int k_;
  int accepted_ = 0;
  std::vector<int> pebbles_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<int> seen_;
  int stamp_ = 0;
  std::vector<Vertex> parent_;
};

// Every subgraph with at least one edge has freedom_count >= l.
bool is_sparse(const SimpleGraph& g, SparsityParams p);

// Sparse and freedom_count(g) == l.
bool is_tight(const SimpleGraph& g, SparsityParams p);

// True iff a (2,l)-tight subgraph Y of g exists with ab in E(Y) and c not in
// V(Y). Requires ab in E(g), c distinct from a,b, and g minus c to be sparse.
bool blocker_exists(const SimpleGraph& g, Edge ab, Vertex c, SparsityParams p);

// True iff g + uv is still sparse; requires uv absent and g sparse.
bool edge_insertable(const SimpleGraph& g, Vertex u, Vertex v, SparsityParams p);

// Play the whole game (optionally ignoring every edge at `skip`); throws if
// an insertion is refused, i.e. the considered edge set is not sparse. The
// returned state answers gather queries for blocker/insertability tests.
PebbleState play_pebbles(const SimpleGraph& g, SparsityParams p, Vertex skip = -1);

// Exhaustive search for a blocker's vertex set (small graphs only); the
// pebble game answers existence, this names the subgraph.
std::optional<VertexSet> blocker_witness(const SimpleGraph& g, Edge ab, Vertex c,
                                         SparsityParams p);

// Why a graph fails to be sparse: a violating vertex set when the graph is
// small enough to scan, otherwise the edge whose insertion the game refused.
struct SparsityViolation {
  std::optional<VertexSet> vertices;
  std::optional<Edge> failing_edge;
  std::string describe() const;
};
std::optional<SparsityViolation> find_violation(const SimpleGraph& g, SparsityParams p);

}  // namespace tg
