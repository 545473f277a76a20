#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tightgraph/graph6.hpp"
#include "tightgraph/reduce.hpp"
#include "tightgraph/sparsity.hpp"

using namespace tg;

namespace {
const SparsityParams L1(1), L2(2), L3(3);

SimpleGraph two_k4s_bridged() {
  // K4 on {0..3}, K4 on {4..7}, bridge 3-4
  std::vector<Edge> edges;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      edges.push_back({u, v});
      edges.push_back({u + 4, v + 4});
    }
  edges.push_back({3, 4});
  return SimpleGraph(8, std::move(edges));
}
}  // namespace

TEST_CASE("base sparsity facts") {
  CHECK_FALSE(is_sparse(complete_graph(4), L3));
  CHECK(is_sparse(base_graph(BaseTag::k5_minus_edge), L1));
  CHECK_FALSE(is_sparse(base_graph(BaseTag::glued_k4s), L2));
  CHECK_FALSE(is_sparse(base_graph(BaseTag::k5_minus_edge), L2));

  CHECK(is_tight(complete_graph(4), L2));
  CHECK(is_tight(base_graph(BaseTag::glued_k4s), L1));
  CHECK_FALSE(is_tight(base_graph(BaseTag::k5_minus_edge), L2));
  CHECK(is_tight(complete_graph(2), L3));
}

TEST_CASE("params validate") {
  CHECK_THROWS_AS(SparsityParams(0), std::invalid_argument);
  CHECK_THROWS_AS(SparsityParams(4), std::invalid_argument);
}

TEST_CASE("pebble game agrees with the subset oracle") {
  std::mt19937_64 rng(20240818);
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    SimpleGraph g(n, std::move(edges));
    for (int l = 1; l <= 3; ++l)
      CHECK(is_sparse(g, SparsityParams(l)) == oracle::is_sparse_subsets(g, l));
  }
}

TEST_CASE("sparsity is closed under subgraphs") {
  std::mt19937_64 rng(5);
  const SimpleGraph g = base_graph(BaseTag::glued_k4s);
  for (unsigned mask = 0; mask < (1u << 6); ++mask) {
    VertexSet s;
    for (int v = 0; v < 6; ++v)
      if (mask >> v & 1) s.push_back(v);
    CHECK(is_sparse(induced(g, s), L1));
  }
}

TEST_CASE("blocker queries match the exhaustive witness search") {
  // K4K4: the first K4 blocks the merge edge 0-1 against apex 4 for l=2 only
  const SimpleGraph gk = base_graph(BaseTag::glued_k4s);
  CHECK(blocker_exists(gk, {0, 1}, 4, L2));
  CHECK(oracle::blocker_subsets(gk, {0, 1}, 4, 2).has_value());
  CHECK_FALSE(blocker_exists(gk, {0, 1}, 4, L1));
  CHECK_FALSE(oracle::blocker_subsets(gk, {0, 1}, 4, 1).has_value());
  CHECK(blocker_witness(gk, {0, 1}, 4, L2) == VertexSet{0, 1, 2, 3});

  // K4: anything through one edge avoiding the opposite vertex is too free
  const SimpleGraph k4 = complete_graph(4);
  CHECK_FALSE(blocker_exists(k4, {0, 1}, 2, L1));
  CHECK_FALSE(blocker_exists(k4, {0, 1}, 2, L2));
  CHECK_FALSE(oracle::blocker_subsets(k4, {0, 1}, 2, 1).has_value());
  CHECK_FALSE(oracle::blocker_subsets(k4, {0, 1}, 2, 2).has_value());

  // two bridged K4s: the first K4 is a (2,2)-tight blocker, nothing at l=1
  const SimpleGraph gb = two_k4s_bridged();
  CHECK(blocker_exists(gb, {0, 1}, 7, L2));
  CHECK(oracle::blocker_subsets(gb, {0, 1}, 7, 2).has_value());
  CHECK_FALSE(blocker_exists(gb, {0, 1}, 7, L1));
  CHECK_FALSE(oracle::blocker_subsets(gb, {0, 1}, 7, 1).has_value());

  CHECK_THROWS_AS(blocker_exists(k4, {0, 1}, 1, L2), std::invalid_argument);
}

TEST_CASE("blocker agreement over random sparse graphs") {
  std::mt19937_64 rng(77);
  int checked = 0;
  while (checked < 400) {
    const int n = 4 + static_cast<int>(rng() % 3);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) edges.push_back({u, v});
    SimpleGraph g(n, std::move(edges));
    if (g.edge_count() == 0) continue;
    for (int l = 1; l <= 2; ++l) {
      const Edge ab = g.edges()[rng() % g.edge_count()];
      Vertex c = static_cast<Vertex>(rng() % n);
      if (c == ab.u || c == ab.v) continue;
      VertexSet rest;
      for (Vertex v = 0; v < n; ++v)
        if (v != c) rest.push_back(v);
      if (!oracle::is_sparse_subsets(induced(g, rest), l)) continue;
      CHECK(blocker_exists(g, ab, c, SparsityParams(l)) ==
            oracle::blocker_subsets(g, ab, c, l).has_value());
      ++checked;
    }
  }
}

TEST_CASE("edge insertion feasibility") {
  // K4 minus an edge takes that edge back
  SimpleGraph k4me(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(edge_insertable(k4me, 0, 1, L2));

  // K4 plus an isolated vertex accepts a pendant edge at any l
  SimpleGraph k4iso(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(edge_insertable(k4iso, 0, 4, L1));
  CHECK(edge_insertable(k4iso, 0, 4, L2));

  // K4K4 is already tight at l=1; nothing further fits
  CHECK_FALSE(edge_insertable(base_graph(BaseTag::glued_k4s), 0, 4, L1));

  CHECK_THROWS_AS(edge_insertable(complete_graph(4), 0, 1, L2), std::invalid_argument);
}

TEST_CASE("violation reporting names a subgraph") {
  auto v = find_violation(complete_graph(4), L3);
  REQUIRE(v.has_value());
  REQUIRE(v->vertices.has_value());
  CHECK(v->vertices->size() == 4);
  CHECK(v->describe().find("vertex set") != std::string::npos);
  CHECK_FALSE(find_violation(complete_graph(4), L2).has_value());
}

TEST_CASE("blocker on an edge requires valid arguments") {
  CHECK_THROWS_AS(blocker_exists(complete_graph(4), {0, 1}, 0, L2), std::invalid_argument);
  SimpleGraph g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(blocker_exists(g, {0, 2}, 3, L2), std::invalid_argument);
}
