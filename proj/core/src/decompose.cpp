#include "tightgraph/decompose.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace tg {

namespace {

// Matroid-union working set: edges by index (the added l=3 edge may be
// parallel to an existing one, so indices, not endpoint pairs, are the
// ground set).
struct Ground {
  int n;
  std::vector<Edge> edges;
};

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[a] = b;
    return true;
  }
};

// forest test
bool graphic_independent(const Ground& g, const std::vector<char>& in, int extra) {
  UnionFind uf(g.n);
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (in[i] || static_cast<int>(i) == extra)
      if (!uf.unite(g.edges[i].u, g.edges[i].v)) return false;
  return true;
}

// at most one cycle per connected component
bool bicircular_independent(const Ground& g, const std::vector<char>& in, int extra) {
  UnionFind uf(g.n);
  std::vector<int> cycles(g.n, 0);
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (!in[i] && static_cast<int>(i) != extra) continue;
    int a = uf.find(g.edges[i].u), b = uf.find(g.edges[i].v);
    if (a == b) {
      if (++cycles[a] > 1) return false;
    } else {
      int c = cycles[a] + cycles[b];
      if (c > 1) return false;
      uf.up[a] = b;
      cycles[b] = c;
    }
  }
  return true;
}

using IndepFn = bool (*)(const Ground&, const std::vector<char>&, int);

// circuit of side's current set plus `elem`: the members whose removal
// restores independence (elem excluded)
std::vector<int> circuit(const Ground& g, IndepFn indep, std::vector<char>& in, int elem) {
  std::vector<int> out;
  for (size_t y = 0; y < in.size(); ++y) {
    if (!in[y]) continue;
    in[y] = 0;
    if (indep(g, in, elem)) out.push_back(static_cast<int>(y));
    in[y] = 1;
  }
  return out;
}

// Partition all edges into two independent sets by BFS augmentation: an
// unplaced element enters a side directly, or evicts a member of the circuit
// it closes; the evictee tries the other side, and so on. Settling a
// shortest such chain keeps both sides independent (asserted).
bool matroid_union_partition(const Ground& g, IndepFn indep0, IndepFn indep1,
                             std::vector<char>& side0, std::vector<char>& side1) {
  const int m = static_cast<int>(g.edges.size());
  side0.assign(m, 0);
  side1.assign(m, 0);
  for (int e = 0; e < m; ++e) {
    // par[s][x]: predecessor element of state "x enters side s";
    // -2 unvisited, -1 root (the new element)
    std::array<std::vector<int>, 2> par;
    par[0].assign(m, -2);
    par[1].assign(m, -2);
    std::deque<std::array<int, 2>> queue;  // (element, side it wants to enter)
    par[0][e] = par[1][e] = -1;
    queue.push_back({e, 0});
    queue.push_back({e, 1});
    bool augmented = false;
    while (!queue.empty() && !augmented) {
      const auto [x, side] = queue.front();
      queue.pop_front();
      auto& in = side == 0 ? side0 : side1;
      IndepFn indep = side == 0 ? indep0 : indep1;
      if (indep(g, in, x)) {
        int cur = x, cur_side = side;
        while (true) {
          (cur_side == 0 ? side0 : side1)[cur] = 1;
          const int prev = par[cur_side][cur];
          if (prev == -1) break;  // the new element; it came from nowhere
          (cur_side == 0 ? side1 : side0)[cur] = 0;
          cur = prev;
          cur_side = 1 - cur_side;
        }
        augmented = true;
      } else {
        for (int y : circuit(g, indep, in, x)) {
          const int other = 1 - side;
          if (par[other][y] != -2) continue;
          par[other][y] = x;
          queue.push_back({y, other});
        }
      }
    }
    if (!augmented) return false;
    assert(indep0(g, side0, -1) && indep1(g, side1, -1));
    assert(side0[e] + side1[e] == 1);
  }
  return true;
}

}  // namespace

namespace {

Decomposition decompose_impl(const SimpleGraph& g, SparsityParams p,
                             std::optional<Edge> added) {
  if (!is_tight(g, p)) throw std::invalid_argument("decompose requires a (2,l)-tight graph");
  Ground ground{g.vertex_count(), g.edges()};
  if (added) ground.edges.push_back(*added);
  std::vector<char> side0, side1;
  const IndepFn second = p.l == 1 ? bicircular_independent : graphic_independent;
  if (!matroid_union_partition(ground, graphic_independent, second, side0, side1))
    throw std::logic_error("matroid union failed on a tight graph");
  Decomposition d;
  d.added_edge = added;
  for (size_t i = 0; i < ground.edges.size(); ++i)
    (side0[i] ? d.tree_edges : d.map_edges).push_back(ground.edges[i]);
  assert(verify_decomposition(g, d, p));
  return d;
}

}  // namespace

Decomposition decompose(const SimpleGraph& g, SparsityParams p, Edge added) {
  if (p.l != 3) throw std::invalid_argument("an added edge applies to l=3 only");
  added = make_edge(added.u, added.v);
  if (added.u < 0 || added.v >= g.vertex_count())
    throw std::invalid_argument("added edge out of range");
  return decompose_impl(g, p, added);
}

Decomposition decompose(const SimpleGraph& g, SparsityParams p) {
  if (p.l != 3) return decompose_impl(g, p, std::nullopt);
  Edge added{0, 1};
  bool found = false;
  for (Vertex u = 0; u < g.vertex_count() && !found; ++u)
    for (Vertex v = u + 1; v < g.vertex_count() && !found; ++v)
      if (!g.adjacent(u, v)) {
        added = {u, v};
        found = true;
      }
  // complete graphs (K2, K3) have no free pair; double the first edge
  if (!found) added = g.edges().at(0);
  return decompose_impl(g, p, added);
}

bool verify_decomposition(const SimpleGraph& g, const Decomposition& d, SparsityParams p) {
  const int n = g.vertex_count();
  // multiset T u P == E (plus the added edge for l=3)
  std::vector<Edge> want = g.edges();
  if (p.l == 3) {
    if (!d.added_edge) return false;
    want.push_back(*d.added_edge);
  } else if (d.added_edge) {
    return false;
  }
  std::vector<Edge> got = d.tree_edges;
  got.insert(got.end(), d.map_edges.begin(), d.map_edges.end());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) return false;

  // T: spanning tree of the n vertices
  if (static_cast<int>(d.tree_edges.size()) != n - 1) return false;
  {
    UnionFind uf(n);
    for (const auto& e : d.tree_edges)
      if (!uf.unite(e.u, e.v)) return false;
  }

  if (p.l == 1) {
    // every component of (V, P) carries exactly one cycle: edges == vertices
    if (static_cast<int>(d.map_edges.size()) != n) return false;
    UnionFind uf(n);
    for (const auto& e : d.map_edges) uf.unite(e.u, e.v);
    std::vector<int> vtx(n, 0), edg(n, 0);
    for (int v = 0; v < n; ++v) ++vtx[uf.find(v)];
    for (const auto& e : d.map_edges) ++edg[uf.find(e.u)];
    for (int v = 0; v < n; ++v)
      if (uf.find(v) == v && edg[v] != vtx[v]) return false;
  } else {
    // second spanning tree
    if (static_cast<int>(d.map_edges.size()) != n - 1) return false;
    UnionFind uf(n);
    for (const auto& e : d.map_edges)
      if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

}  // namespace tg
