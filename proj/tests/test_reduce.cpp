#include <doctest.h>

#include <random>

#include "tightgraph/enumerate.hpp"
#include "tightgraph/graph6.hpp"
#include "tightgraph/random_build.hpp"
#include "tightgraph/reduce.hpp"

using namespace tg;

namespace {
const SparsityParams L1(1), L2(2), L3(3);
SimpleGraph k5e() { return base_graph(BaseTag::k5_minus_edge); }
SimpleGraph k4k4() { return base_graph(BaseTag::glued_k4s); }
}  // namespace

TEST_CASE("base graphs and matching") {
  CHECK(match_base(complete_graph(2), L3) == BaseTag::k2);
  CHECK(match_base(complete_graph(4), L2) == BaseTag::k4);
  CHECK(match_base(k5e(), L1) == BaseTag::k5_minus_edge);
  CHECK(match_base(k4k4(), L1) == BaseTag::glued_k4s);
  CHECK_FALSE(match_base(complete_graph(4), L1).has_value());
  CHECK_FALSE(match_base(k5e(), L2).has_value());
}

TEST_CASE("reduce_step picks the cheapest available inverse") {
  // pendant vertex goes first
  SimpleGraph g1 = apply_h1(k4k4(), 0, 1);
  auto s1 = reduce_step(g1, L1);
  REQUIRE(s1.has_value());
  CHECK(std::holds_alternative<MoveH1>(s1->forward));
  CHECK(isomorphic(s1->children[0], k4k4()));

  // a bridged pair separates
  SimpleGraph g2 = apply_edge_join(k5e(), k5e(), 0, 0);
  auto s2 = reduce_step(g2, L1);
  REQUIRE(s2.has_value());
  CHECK(std::holds_alternative<MoveEdgeJoin>(s2->forward));
  CHECK(s2->children.size() == 2);
  CHECK(isomorphic(s2->children[0], k5e()));
  CHECK(isomorphic(s2->children[1], k5e()));

  // an expanded K4 reduces one way or another
  const SimpleGraph k4 = complete_graph(4);
  std::vector<std::pair<Vertex, int>> asg;
  for (Vertex x : k4.neighbors(0)) asg.emplace_back(x, 1);
  SimpleGraph g3 = apply_vertex_to_k4(k4, 0, asg);
  REQUIRE(is_tight(g3, L2));
  auto s3 = reduce_step(g3, L2);
  REQUIRE(s3.has_value());
  for (const auto& c : s3->children) CHECK(is_tight(c, L2));

  // bases admit nothing
  CHECK_FALSE(reduce_step(k5e(), L1).has_value());
  CHECK_FALSE(reduce_step(k4k4(), L1).has_value());
  CHECK_FALSE(reduce_step(complete_graph(4), L2).has_value());
  CHECK_FALSE(reduce_step(complete_graph(2), L3).has_value());
}

TEST_CASE("deconstruct single leaf") {
  ConstructionSequence seq = deconstruct(k5e(), L1);
  REQUIRE(seq.root != nullptr);
  CHECK(seq.root->base == BaseTag::k5_minus_edge);
  CHECK(isomorphic(replay(seq), k5e()));
}

TEST_CASE("deconstruct rejects non-tight inputs with a witness") {
  CHECK_THROWS_WITH_AS(deconstruct(complete_graph(4), L1), doctest::Contains("not (2,1)-tight"),
                       std::invalid_argument);
  try {
    deconstruct(complete_graph(5), L2);
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("vertex set") != std::string::npos);
  }
}

TEST_CASE("join certificates carry two children") {
  SimpleGraph g = apply_edge_join(k5e(), k4k4(), 1, 2);
  ConstructionSequence seq = deconstruct(g, L1);
  REQUIRE(seq.root->move.has_value());
  CHECK(std::holds_alternative<MoveEdgeJoin>(*seq.root->move));
  REQUIRE(seq.root->child != nullptr);
  REQUIRE(seq.root->right != nullptr);
  CHECK(isomorphic(replay(seq), g));
}

TEST_CASE("random forward builds deconstruct and replay to the same form") {
  std::mt19937_64 rng(424242);
  for (int l = 1; l <= 3; ++l) {
    SparsityParams p(l);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = smallest_base_order(p) + static_cast<int>(rng() % 18);
      SimpleGraph g = random_tight_graph(n, p, rng);
      ConstructionSequence seq = deconstruct(g, p);
      CHECK(canonical_form(replay(seq)) == canonical_form(g));
    }
  }
}

TEST_CASE("certificate JSON round trips and tampering is caught") {
  SimpleGraph g = apply_h2(apply_h1(k4k4(), 2, 5), {0, 1}, 3);
  ConstructionSequence seq = deconstruct(g, L1);
  const std::string text = certificate_to_json(seq);
  ConstructionSequence back = certificate_from_json(text);
  CHECK(canonical_form(replay(back)) == canonical_form(g));
  CHECK(certificate_to_json(back) == text);

  // corrupt the stored hash
  std::string bad = text;
  auto pos = bad.find("\"hash\":\"");
  REQUIRE(pos != std::string::npos);
  bad[pos + 8] = bad[pos + 8] == '0' ? '1' : '0';
  ConstructionSequence tampered = certificate_from_json(bad);
  CHECK_THROWS_AS(replay(tampered), std::invalid_argument);

  CHECK_THROWS_AS(certificate_from_json("{\"format\":\"nope\"}"), std::invalid_argument);
}

TEST_CASE("replay refuses a join of a non-tight part") {
  SimpleGraph g = apply_edge_join(k5e(), k5e(), 0, 4);
  ConstructionSequence seq = deconstruct(g, L1);
  // swap the left leaf for a K4 (not (2,1)-tight)
  REQUIRE(seq.root->child->base.has_value());
  seq.root->child->leaf_graph = complete_graph(4);
  CHECK_THROWS_AS(replay(seq), std::invalid_argument);
}

TEST_CASE("l=3 certificates use Henneberg moves only") {
  std::mt19937_64 rng(8);
  SimpleGraph g = random_tight_graph(9, L3, rng);
  ConstructionSequence seq = deconstruct(g, L3);
  for (const ConstructionNode* node = seq.root.get(); node; node = node->child.get()) {
    if (node->move)
      CHECK((std::holds_alternative<MoveH1>(*node->move) ||
             std::holds_alternative<MoveH2>(*node->move)));
    else
      CHECK(node->base == BaseTag::k2);
  }
}
