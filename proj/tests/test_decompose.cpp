#include <doctest.h>

#include <random>

#include "tightgraph/decompose.hpp"
#include "tightgraph/enumerate.hpp"
#include "tightgraph/random_build.hpp"
#include "tightgraph/reduce.hpp"

using namespace tg;

namespace {
const SparsityParams L1(1), L2(2), L3(3);
}

TEST_CASE("K4 splits into two spanning trees") {
  Decomposition d = decompose(complete_graph(4), L2);
  CHECK(d.tree_edges.size() == 3);
  CHECK(d.map_edges.size() == 3);
  CHECK(verify_decomposition(complete_graph(4), d, L2));
}

TEST_CASE("K4K4 splits into a tree and a one-cycle-per-component spanning part") {
  const SimpleGraph g = base_graph(BaseTag::glued_k4s);
  Decomposition d = decompose(g, L1);
  CHECK(d.tree_edges.size() == 5);
  CHECK(d.map_edges.size() == 6);
  CHECK(verify_decomposition(g, d, L1));
}

TEST_CASE("verifier rejects broken splits") {
  const SimpleGraph g = complete_graph(4);
  Decomposition d = decompose(g, L2);
  // swap one edge across the sides: multiset stays right, trees break
  std::swap(d.tree_edges[0], d.map_edges[0]);
  const bool still_trees = verify_decomposition(g, d, L2);
  std::swap(d.tree_edges[0], d.map_edges[0]);
  Decomposition bad = d;
  bad.map_edges.push_back(bad.tree_edges.back());
  bad.tree_edges.pop_back();
  CHECK_FALSE(verify_decomposition(g, bad, L2));
  CHECK(verify_decomposition(g, d, L2));
  (void)still_trees;  // may or may not be a valid alternative split

  // a P component without its cycle is rejected at l=1: here T is a genuine
  // spanning tree but vertex 0 sits isolated in P
  const SimpleGraph gk = base_graph(BaseTag::glued_k4s);
  Decomposition iso_p;
  iso_p.tree_edges = {{0, 1}, {0, 2}, {0, 3}, {2, 4}, {2, 5}};
  iso_p.map_edges = {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
  CHECK_FALSE(verify_decomposition(gk, iso_p, L1));
  CHECK(verify_decomposition(gk, decompose(gk, L1), L1));
}

TEST_CASE("l=3 adjoins an edge, default or chosen, parallel allowed") {
  // K2: only possible extra edge doubles the lone edge
  Decomposition d2 = decompose(complete_graph(2), L3);
  REQUIRE(d2.added_edge.has_value());
  CHECK(*d2.added_edge == Edge{0, 1});
  CHECK(verify_decomposition(complete_graph(2), d2, L3));

  // K3 likewise has no free pair
  Decomposition d3 = decompose(complete_graph(3), L3);
  CHECK(verify_decomposition(complete_graph(3), d3, L3));

  // a Laman graph with a real non-edge
  SimpleGraph laman(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  Decomposition d = decompose(laman, L3);
  REQUIRE(d.added_edge.has_value());
  CHECK(*d.added_edge == Edge{0, 3});
  CHECK(verify_decomposition(laman, d, L3));

  // every choice of added pair works
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v)
      CHECK(verify_decomposition(laman, decompose(laman, L3, {u, v}), L3));
}

TEST_CASE("input must be tight") {
  CHECK_THROWS_AS(decompose(complete_graph(4), L1), std::invalid_argument);
  CHECK_THROWS_AS(decompose(complete_graph(5), L2), std::invalid_argument);
  CHECK_THROWS_AS(decompose(complete_graph(4), L2, {0, 1}), std::invalid_argument);
}

TEST_CASE("random tight graphs decompose at every l") {
  std::mt19937_64 rng(31337);
  for (int l = 1; l <= 3; ++l) {
    SparsityParams p(l);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = smallest_base_order(p) + static_cast<int>(rng() % 12);
      SimpleGraph g = random_tight_graph(n, p, rng);
      Decomposition d = decompose(g, p);
      CHECK(verify_decomposition(g, d, p));
      CHECK(d.tree_edges.size() == static_cast<size_t>(n - 1));
      CHECK(d.map_edges.size() == static_cast<size_t>(l == 1 ? n : n - 1));
    }
  }
}
