#include <doctest.h>

#include <algorithm>

#include "tightgraph/enumerate.hpp"
#include "tightgraph/reduce.hpp"

using namespace tg;

namespace {
const SparsityParams L1(1), L2(2), L3(3);
}

TEST_CASE("smallest levels are the bases alone") {
  auto by_moves_l2 = generate_by_moves(4, L2);
  REQUIRE(by_moves_l2.count(4) == 1);
  CHECK(by_moves_l2.at(4) == std::vector<CanonicalForm>{canonical_form(complete_graph(4))});

  auto by_moves_l1 = generate_by_moves(5, L1);
  REQUIRE(by_moves_l1.count(5) == 1);
  CHECK(by_moves_l1.at(5) ==
        std::vector<CanonicalForm>{canonical_form(base_graph(BaseTag::k5_minus_edge))});

  auto by_moves_l3 = generate_by_moves(3, L3);
  REQUIRE(by_moves_l3.count(3) == 1);
  CHECK(by_moves_l3.at(3) == std::vector<CanonicalForm>{canonical_form(complete_graph(3))});
}

TEST_CASE("brute force pins the same smallest levels") {
  CHECK(generate_brute_force(5, L1) ==
        std::vector<CanonicalForm>{canonical_form(base_graph(BaseTag::k5_minus_edge))});
  CHECK(generate_brute_force(3, L3) ==
        std::vector<CanonicalForm>{canonical_form(complete_graph(3))});
  CHECK(generate_brute_force(4, L2).size() == 1);
  CHECK(generate_brute_force(4, L1).empty());
}

TEST_CASE("move closure stays inside the brute-force set") {
  for (int l = 1; l <= 3; ++l) {
    SparsityParams p(l);
    const int n_max = smallest_base_order(p) + 2;
    auto by_moves = generate_by_moves(n_max, p);
    for (const auto& [n, forms] : by_moves) {
      auto brute = generate_brute_force(n, p);
      CHECK(std::includes(brute.begin(), brute.end(), forms.begin(), forms.end()));
    }
  }
}

TEST_CASE("generated graphs are tight and carry a reduction") {
  for (int l = 1; l <= 3; ++l) {
    SparsityParams p(l);
    auto by_moves = generate_by_moves(smallest_base_order(p) + 2, p);
    for (const auto& [n, forms] : by_moves)
      for (const auto& g : decode_level(forms)) {
        CHECK(is_tight(g, p));
        const bool base = match_base(g, p).has_value();
        const bool reducible = reduce_step(g, p).has_value();
        CHECK((base || reducible));
      }
  }
}

TEST_CASE("worker threads change nothing") {
  auto solo = generate_by_moves(7, L2, 1);
  auto pooled = generate_by_moves(7, L2, 3);
  REQUIRE(solo.size() == pooled.size());
  for (const auto& [n, forms] : solo) CHECK(pooled.at(n) == forms);
}

TEST_CASE("small compare runs agree") {
  for (int l = 1; l <= 3; ++l) {
    SparsityParams p(l);
    auto rep = compare_generators(smallest_base_order(p) + 1, p);
    CHECK(rep.equal);
    CHECK(rep.mismatches.empty());
    for (const auto& [n, counts] : rep.counts) CHECK(counts.first == counts.second);
  }
}
