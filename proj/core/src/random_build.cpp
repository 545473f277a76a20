#include "tightgraph/random_build.hpp"

#include <cassert>

#include "tightgraph/enumerate.hpp"
#include "tightgraph/moves.hpp"
#include "tightgraph/reduce.hpp"

namespace tg {

namespace {

SimpleGraph random_base(SparsityParams p, std::mt19937_64& rng) {
  if (p.l == 3) return base_graph(BaseTag::k2);
  if (p.l == 2) return base_graph(BaseTag::k4);
  return bounded_draw(rng, 2) ? base_graph(BaseTag::glued_k4s)
                              : base_graph(BaseTag::k5_minus_edge);
}

SimpleGraph grow_once(const SimpleGraph& g, SparsityParams p, int room,
                      std::mt19937_64& rng) {
  const int n = g.vertex_count();
  while (true) {
    const int kind = static_cast<int>(bounded_draw(rng, p.l <= 2 ? 4 : 2));
    if (kind == 0) {  // h1
      Vertex a = static_cast<Vertex>(bounded_draw(rng, n));
      Vertex b = static_cast<Vertex>(bounded_draw(rng, n - 1));
      if (b >= a) ++b;
      return apply_h1(g, a, b);
    }
    if (kind == 1) {  // h2
      const Edge e = g.edges()[bounded_draw(rng, g.edge_count())];
      Vertex w = static_cast<Vertex>(bounded_draw(rng, n));
      if (w == e.u || w == e.v) continue;
      return apply_h2(g, e, w);
    }
    if (kind == 2) {  // edge_to_k3
      const Edge e = g.edges()[bounded_draw(rng, g.edge_count())];
      const Vertex v = bounded_draw(rng, 2) ? e.v : e.u;
      const Vertex u = v == e.u ? e.v : e.u;
      VertexSet a_side, b_side;
      for (Vertex x : g.neighbors(v))
        if (x != u) (bounded_draw(rng, 2) ? b_side : a_side).push_back(x);
      return apply_edge_to_k3(g, v, u, a_side, b_side);
    }
    // vertex_to_k4 consumes three labels at once
    if (room < 3) continue;
    const Vertex v = static_cast<Vertex>(bounded_draw(rng, n));
    std::vector<std::pair<Vertex, int>> assignment;
    for (Vertex x : g.neighbors(v))
      assignment.emplace_back(x, static_cast<int>(bounded_draw(rng, 4)));
    return apply_vertex_to_k4(g, v, assignment);
  }
}

}  // namespace

SimpleGraph random_tight_graph(int n_target, SparsityParams p, std::mt19937_64& rng) {
  if (n_target < smallest_base_order(p))
    throw std::invalid_argument("target below base size");
  // l=1: sometimes bridge two halves
  if (p.l == 1 && n_target >= 10 && bounded_draw(rng, 3) == 0) {
    const int left_n = 5 + static_cast<int>(bounded_draw(rng, n_target - 9));
    SimpleGraph left = random_tight_graph(left_n, p, rng);
    SimpleGraph right = random_tight_graph(n_target - left_n, p, rng);
    const Vertex u = static_cast<Vertex>(bounded_draw(rng, left.vertex_count()));
    const Vertex v = static_cast<Vertex>(bounded_draw(rng, right.vertex_count()));
    return apply_edge_join(left, right, u, v);
  }
  SimpleGraph g = random_base(p, rng);
  if (p.l == 1 && g.vertex_count() > n_target) g = base_graph(BaseTag::k5_minus_edge);
  while (g.vertex_count() < n_target)
    g = grow_once(g, p, n_target - g.vertex_count(), rng);
  assert(is_tight(g, p));
  return g;
}

}  // namespace tg
