#include <doctest.h>

#include <random>

#include "tightgraph/graph6.hpp"

using namespace tg;

TEST_CASE("known encodings") {
  CHECK(read_graph6("C~") == complete_graph(4));
  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(write_graph6(SimpleGraph(0, {})) == "?");
  CHECK(read_graph6("?").vertex_count() == 0);
  // path on three vertices 0-1-2, column-major upper triangle bits 110 -> 'r'... decoded back
  SimpleGraph p3(3, {{0, 1}, {1, 2}});
  CHECK(read_graph6(write_graph6(p3)) == p3);
  CHECK(read_graph6(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("errors carry byte offsets") {
  CHECK_THROWS_AS(read_graph6(""), Graph6Error);
  CHECK_THROWS_AS(read_graph6("C"), Graph6Error);        // truncated body
  CHECK_THROWS_AS(read_graph6("C~~"), Graph6Error);      // trailing data
  CHECK_THROWS_AS(read_graph6("C\x1f"), Graph6Error);    // byte below range
  CHECK_THROWS_AS(read_graph6(">>graphX<<C~"), Graph6Error);
  try {
    read_graph6("C");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_offset == 1);
  }
}

TEST_CASE("round trip is the identity on labeled graphs") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.push_back({u, v});
    SimpleGraph g(n, std::move(edges));
    const std::string s = write_graph6(g);
    CHECK(read_graph6(s) == g);
    CHECK(write_graph6(read_graph6(s)) == s);
  }
}

TEST_CASE("multi-byte vertex counts") {
  SimpleGraph big(80, {{0, 79}, {1, 2}});
  CHECK(read_graph6(write_graph6(big)) == big);
}
