#include "tightgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tg {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop edge");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) + "," +
                                  std::to_string(e.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");

  words_ = n_ == 0 ? 1 : (n_ + 63) / 64;
  adj_.assign(n_, {});
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
  for (const auto& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    bits_[static_cast<size_t>(e.u) * words_ + (e.v >> 6)] |= std::uint64_t{1} << (e.v & 63);
    bits_[static_cast<size_t>(e.v) * words_ + (e.u >> 6)] |= std::uint64_t{1} << (e.u & 63);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int freedom_count(const SimpleGraph& g) { return 2 * g.vertex_count() - g.edge_count(); }

SimpleGraph induced(const SimpleGraph& g, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> pos(g.vertex_count(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
      throw std::invalid_argument("vertex set member out of range");
    pos[sorted[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (pos[e.u] >= 0 && pos[e.v] >= 0) edges.push_back({pos[e.u], pos[e.v]});
  return SimpleGraph(static_cast<int>(sorted.size()), std::move(edges));
}

std::vector<std::array<Vertex, 3>> list_triangles(const SimpleGraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  const int words = g.words_per_row();
  for (const auto& e : g.edges()) {
    auto ru = g.row(e.u), rv = g.row(e.v);
    for (int w = 0; w < words; ++w) {
      std::uint64_t common = ru[w] & rv[w];
      while (common) {
        int bit = std::countr_zero(common);
        common &= common - 1;
        Vertex x = w * 64 + bit;
        if (x > e.v) out.push_back({e.u, e.v, x});
      }
    }
  }
  return out;
}

std::vector<std::array<Vertex, 4>> list_k4s(const SimpleGraph& g) {
  std::vector<std::array<Vertex, 4>> out;
  const int words = g.words_per_row();
  for (const auto& t : list_triangles(g)) {
    auto r0 = g.row(t[0]), r1 = g.row(t[1]), r2 = g.row(t[2]);
    for (int w = 0; w < words; ++w) {
      std::uint64_t common = r0[w] & r1[w] & r2[w];
      while (common) {
        int bit = std::countr_zero(common);
        common &= common - 1;
        Vertex x = w * 64 + bit;
        if (x > t[2]) out.push_back({t[0], t[1], t[2], x});
      }
    }
  }
  return out;
}

SimpleGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return SimpleGraph(n, std::move(edges));
}

}  // namespace tg
