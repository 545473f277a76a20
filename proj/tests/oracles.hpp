// Independent oracles used to pin expected values before trusting the fast
// implementations. Deliberately naive: subset scans and permutation tests
// that share no code path with the library.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "tightgraph/graph.hpp"

namespace oracle {

// (2,l)-sparsity by scanning every vertex subset's induced edge count.
inline bool is_sparse_subsets(const tg::SimpleGraph& g, int l) {
  const int n = g.vertex_count();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int vertices = 0, edges = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) ++vertices;
    for (const auto& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++edges;
    if (edges >= 1 && 2 * vertices - edges < l) return false;
  }
  return true;
}

inline bool is_tight_subsets(const tg::SimpleGraph& g, int l) {
  return 2 * g.vertex_count() - g.edge_count() == l && is_sparse_subsets(g, l);
}

// Tight subgraph through edge ab avoiding c, by subset scan.
inline std::optional<tg::VertexSet> blocker_subsets(const tg::SimpleGraph& g, tg::Edge ab,
                                                    int c, int l) {
  const int n = g.vertex_count();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> ab.u & 1) || !(mask >> ab.v & 1) || (mask >> c & 1)) continue;
    int vertices = 0, edges = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) ++vertices;
    for (const auto& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++edges;
    if (edges == 0 || 2 * vertices - edges != l) continue;
    tg::VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (is_sparse_subsets(tg::induced(g, s), l)) return s;
  }
  return std::nullopt;
}

// Isomorphism by trying every permutation (fine to ~8 vertices).
inline bool isomorphic_permutations(const tg::SimpleGraph& a, const tg::SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (const auto& e : a.edges())
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        match = false;
        break;
      }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline long count_triangles_brute(const tg::SimpleGraph& g) {
  long count = 0;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c)) ++count;
  return count;
}

inline long count_k4s_brute(const tg::SimpleGraph& g) {
  long count = 0;
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(a, d) && g.adjacent(b, c) &&
              g.adjacent(b, d) && g.adjacent(c, d))
            ++count;
  return count;
}

}  // namespace oracle
