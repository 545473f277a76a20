#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tg {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("edge endpoints must differ");
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Sorted list of vertex labels, all within 0..n-1 of the host graph.
using VertexSet = std::vector<Vertex>;

// Immutable simple undirected graph on dense labels 0..n-1.
// No loops, no parallel edges; edge list kept sorted so that equal graphs
// serialize identically. Safe to share across threads once constructed.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  // one bitset row per vertex, words_per_row() words each
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  int words_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

// f(H) = 2|V(H)| - |E(H)|; nonnegative "freedom" of a graph under the (2,l) counts
int freedom_count(const SimpleGraph& g);

// Relabeled subgraph on s (sorted ascending); keeps edges with both ends in s.
SimpleGraph induced(const SimpleGraph& g, const VertexSet& s);

// All vertex triples / quadruples inducing complete subgraphs, each once,
// lexicographically sorted.
std::vector<std::array<Vertex, 3>> list_triangles(const SimpleGraph& g);
std::vector<std::array<Vertex, 4>> list_k4s(const SimpleGraph& g);

SimpleGraph complete_graph(int n);

}  // namespace tg
