#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tightgraph/graph.hpp"
#include "tightgraph/sparsity.hpp"

namespace tg {

// Forward construction moves, recorded with everything replay needs.
// Relabeling conventions (all deterministic):
//   - new vertices take the next free labels n, n+1, ...
//   - a deleted vertex's label is refilled by the current highest label
//   - vertex_to_k4 places the four clique vertices at {v, n, n+1, n+2}

struct MoveH1 {  // add degree-2 vertex adjacent to a and b
  Vertex a = 0, b = 0;
};
struct MoveH2 {  // remove edge uv, add vertex x with edges xu,xv,xw
  Vertex u = 0, v = 0, w = 0;
};
struct MoveVertexToK4 {  // expand v into a K4, rewiring each old neighbor to one slot
  Vertex v = 0;
  std::vector<std::pair<Vertex, int>> assignment;  // (neighbor, slot 0..3), sorted
};
struct MoveEdgeToK3 {  // split v over edge uv; a_side joins v1(=v), b_side joins v2(=n)
  Vertex v = 0, u = 0;
  VertexSet a_side, b_side;
};
struct MoveEdgeJoin {  // bridge two (2,1)-tight graphs; right labels shift by left_size
  int left_size = 0;
  Vertex u = 0, v = 0;
};

using Move = std::variant<MoveH1, MoveH2, MoveVertexToK4, MoveEdgeToK3, MoveEdgeJoin>;

SimpleGraph apply_h1(const SimpleGraph& g, Vertex a, Vertex b);
SimpleGraph apply_h2(const SimpleGraph& g, Edge uv, Vertex w);
SimpleGraph apply_vertex_to_k4(const SimpleGraph& g, Vertex v,
                               const std::vector<std::pair<Vertex, int>>& assignment);
SimpleGraph apply_edge_to_k3(const SimpleGraph& g, Vertex v, Vertex u, const VertexSet& a_side,
                             const VertexSet& b_side);
SimpleGraph apply_edge_join(const SimpleGraph& left, const SimpleGraph& right, Vertex u,
                            Vertex v);

// Unary dispatch; throws on MoveEdgeJoin (that one needs two graphs).
SimpleGraph apply_move(const SimpleGraph& g, const Move& m);

// ---- reduction (inverse move) searches -------------------------------------
// Scan orders are fixed so reductions are reproducible: ascending vertices,
// lexicographic triangles/cliques, lexicographic candidate edges.

// Lowest-index degree-2 vertex; removal of it keeps a tight graph tight.
std::optional<Vertex> find_inverse_h1(const SimpleGraph& g);

struct InverseH2 {
  Vertex v;          // degree-3 vertex removed
  Edge replacement;  // edge added between two of its neighbors
};
// First degree-3 vertex (ascending) not inside a K4 together with the first
// replacement edge whose re-insertion keeps the graph tight. For tight g,
// returns nothing only when every degree-3 vertex lies in a K4.
std::optional<InverseH2> find_inverse_h2(const SimpleGraph& g, SparsityParams p);

// First K4 (lexicographic) whose contraction to a single vertex is simple and
// tight. Pre-filter: no triangle may share exactly two vertices with the K4;
// the contraction is then built and verified outright.
std::optional<std::array<Vertex, 4>> find_k4_to_vertex(const SimpleGraph& g, SparsityParams p);

struct K3ToEdge {
  std::array<Vertex, 3> triangle;  // sorted
  Edge merge;                      // the two vertices merged; third is the apex
};
// First triangle (lexicographic) and merge pair (fixed order) whose merge is
// simple (no second common neighbor) and tight (no blocker through the merge
// edge avoiding the apex); the merged graph is built and verified.
std::optional<K3ToEdge> find_k3_to_edge(const SimpleGraph& g, SparsityParams p);

struct EdgeSeparation {
  Edge bridge;
  VertexSet left;   // side containing bridge.u
  VertexSet right;  // side containing bridge.v
};
// First bridge (lexicographic) of a (2,1)-tight graph; both sides are then
// (2,1)-tight automatically, which is asserted.
std::optional<EdgeSeparation> find_edge_separation(const SimpleGraph& g);

// ---- reduction application --------------------------------------------------
// Build the reduced graph together with the forward Move that rebuilds the
// original (up to the documented relabeling).

struct Reduction {
  SimpleGraph child;
  Move forward;
};
struct SplitReduction {
  SimpleGraph left;
  SimpleGraph right;
  MoveEdgeJoin forward;
};

Reduction reduce_inverse_h1(const SimpleGraph& g, Vertex v);
Reduction reduce_inverse_h2(const SimpleGraph& g, const InverseH2& r);
Reduction reduce_k4_to_vertex(const SimpleGraph& g, const std::array<Vertex, 4>& k4);
Reduction reduce_k3_to_edge(const SimpleGraph& g, const K3ToEdge& r);
SplitReduction reduce_edge_separation(const SimpleGraph& g, const EdgeSeparation& s);

// Remove vertex x; the highest label takes x's place.
SimpleGraph delete_vertex_swap(const SimpleGraph& g, Vertex x);

// Stable JSON encoding of a move: {"type": ..., fields per variant}.
std::string move_to_json(const Move& m);
Move move_from_json(std::string_view json);

}  // namespace tg
