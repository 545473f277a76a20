#include "tightgraph/reduce.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

#include "tightgraph/graph6.hpp"

namespace tg {

SimpleGraph base_graph(BaseTag tag) {
  switch (tag) {
    case BaseTag::k2:
      return complete_graph(2);
    case BaseTag::k4:
      return complete_graph(4);
    case BaseTag::k5_minus_edge: {
      auto edges = complete_graph(5).edges();
      edges.erase(std::find(edges.begin(), edges.end(), Edge{3, 4}));
      return SimpleGraph(5, std::move(edges));
    }
    case BaseTag::glued_k4s: {
      // K4 on {0,1,2,3} and K4 on {2,3,4,5}, sharing the edge 2-3
      std::vector<Edge> edges;
      for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});
      const int second[4] = {2, 3, 4, 5};
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          Edge e = make_edge(second[i], second[j]);
          if (!(e == Edge{2, 3})) edges.push_back(e);
        }
      return SimpleGraph(6, std::move(edges));
    }
  }
  throw std::logic_error("unreachable");
}

const char* base_tag_name(BaseTag tag) {
  switch (tag) {
    case BaseTag::k2: return "K2";
    case BaseTag::k4: return "K4";
    case BaseTag::k5_minus_edge: return "K5-e";
    case BaseTag::glued_k4s: return "K4K4";
  }
  throw std::logic_error("unreachable");
}

namespace {

std::optional<BaseTag> base_tag_from_name(const std::string& s) {
  if (s == "K2") return BaseTag::k2;
  if (s == "K4") return BaseTag::k4;
  if (s == "K5-e") return BaseTag::k5_minus_edge;
  if (s == "K4K4") return BaseTag::glued_k4s;
  return std::nullopt;
}

const CanonicalForm& base_form(BaseTag tag) {
  static const CanonicalForm forms[4] = {
      canonical_form(base_graph(BaseTag::k2)),
      canonical_form(base_graph(BaseTag::k4)),
      canonical_form(base_graph(BaseTag::k5_minus_edge)),
      canonical_form(base_graph(BaseTag::glued_k4s)),
  };
  return forms[static_cast<int>(tag)];
}

std::vector<BaseTag> bases_for(int l) {
  switch (l) {
    case 3: return {BaseTag::k2};
    case 2: return {BaseTag::k4};
    default: return {BaseTag::k5_minus_edge, BaseTag::glued_k4s};
  }
}

}  // namespace

std::optional<BaseTag> match_base(const SimpleGraph& g, SparsityParams p) {
  const auto form = canonical_form(g);
  for (BaseTag tag : bases_for(p.l))
    if (form == base_form(tag)) return tag;
  return std::nullopt;
}

std::optional<ReductionStep> reduce_step(const SimpleGraph& g, SparsityParams p) {
  if (auto v = find_inverse_h1(g)) {
    auto red = reduce_inverse_h1(g, *v);
    return ReductionStep{std::move(red.forward), {std::move(red.child)}};
  }
  if (auto h2 = find_inverse_h2(g, p)) {
    auto red = reduce_inverse_h2(g, *h2);
    return ReductionStep{std::move(red.forward), {std::move(red.child)}};
  }
  if (p.l <= 2) {
    if (auto merge = find_k3_to_edge(g, p)) {
      auto red = reduce_k3_to_edge(g, *merge);
      return ReductionStep{std::move(red.forward), {std::move(red.child)}};
    }
    if (auto quad = find_k4_to_vertex(g, p)) {
      auto red = reduce_k4_to_vertex(g, *quad);
      return ReductionStep{std::move(red.forward), {std::move(red.child)}};
    }
  }
  if (p.l == 1) {
    if (auto sep = find_edge_separation(g)) {
      auto red = reduce_edge_separation(g, *sep);
      return ReductionStep{Move{red.forward}, {std::move(red.left), std::move(red.right)}};
    }
  }
  return std::nullopt;
}

namespace {

// isomorphism from -> to for graphs with equal canonical forms
std::vector<int> iso_mapping(const SimpleGraph& from, const SimpleGraph& to) {
  const auto cf = canonical_labeling(from);
  const auto ct = canonical_labeling(to);
  std::vector<int> inv(to.vertex_count());
  for (int v = 0; v < to.vertex_count(); ++v) inv[ct[v]] = v;
  std::vector<int> map(from.vertex_count());
  for (int v = 0; v < from.vertex_count(); ++v) map[v] = inv[cf[v]];
  return map;
}

// rewrite a move's vertex parameters through child relabelings; move
// application commutes with relabeling, so semantics are unchanged
Move translate_move(const Move& m, const std::vector<int>& phi, const std::vector<int>& psi) {
  return std::visit(
      [&](const auto& mv) -> Move {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, MoveH1>) {
          return MoveH1{std::min(phi[mv.a], phi[mv.b]), std::max(phi[mv.a], phi[mv.b])};
        } else if constexpr (std::is_same_v<T, MoveH2>) {
          return MoveH2{std::min(phi[mv.u], phi[mv.v]), std::max(phi[mv.u], phi[mv.v]),
                        phi[mv.w]};
        } else if constexpr (std::is_same_v<T, MoveVertexToK4>) {
          MoveVertexToK4 out{phi[mv.v], {}};
          for (const auto& [x, slot] : mv.assignment) out.assignment.emplace_back(phi[x], slot);
          std::sort(out.assignment.begin(), out.assignment.end());
          return out;
        } else if constexpr (std::is_same_v<T, MoveEdgeToK3>) {
          MoveEdgeToK3 out{phi[mv.v], phi[mv.u], {}, {}};
          for (Vertex x : mv.a_side) out.a_side.push_back(phi[x]);
          for (Vertex x : mv.b_side) out.b_side.push_back(phi[x]);
          std::sort(out.a_side.begin(), out.a_side.end());
          std::sort(out.b_side.begin(), out.b_side.end());
          return out;
        } else {
          return MoveEdgeJoin{mv.left_size, phi[mv.u], psi[mv.v]};
        }
      },
      m);
}

struct BuildResult {
  std::unique_ptr<ConstructionNode> node;
  SimpleGraph replayed;  // exactly what replay() yields for this node
};

// The reductions record moves in the labels of the child they computed, but
// replay rebuilds children only up to isomorphism; each node's move is
// therefore translated into the labels the replayed child actually carries.
BuildResult deconstruct_node(const SimpleGraph& g, SparsityParams p) {
  auto node = std::make_unique<ConstructionNode>();
  node->n = g.vertex_count();
  node->hash = canonical_hash(canonical_form(g));
  assert(is_tight(g, p));
  if (auto tag = match_base(g, p)) {
    node->base = tag;
    node->leaf_graph = g;
    return {std::move(node), g};
  }
  auto step = reduce_step(g, p);
  if (!step)
    throw std::logic_error(
        "reduction guarantee violated: tight non-base graph admits no move (" +
        write_graph6(g) + ")");
  BuildResult left = deconstruct_node(step->children[0], p);
  const auto phi = iso_mapping(step->children[0], left.replayed);
  SimpleGraph replayed;
  if (step->children.size() == 2) {
    BuildResult right = deconstruct_node(step->children[1], p);
    const auto psi = iso_mapping(step->children[1], right.replayed);
    node->move = translate_move(step->forward, phi, psi);
    const auto& join = std::get<MoveEdgeJoin>(*node->move);
    replayed = apply_edge_join(left.replayed, right.replayed, join.u, join.v);
    node->right = std::move(right.node);
  } else {
    node->move = translate_move(step->forward, phi, phi);
    replayed = apply_move(left.replayed, *node->move);
  }
  node->child = std::move(left.node);
  assert(canonical_hash(canonical_form(replayed)) == node->hash);
  return {std::move(node), std::move(replayed)};
}

}  // namespace

ConstructionSequence deconstruct(const SimpleGraph& g, SparsityParams p) {
  if (!is_tight(g, p)) {
    auto violation = find_violation(g, p);
    std::string why = violation ? violation->describe()
                                : "freedom count is " + std::to_string(freedom_count(g)) +
                                      ", expected " + std::to_string(p.l);
    throw std::invalid_argument("input is not (2," + std::to_string(p.l) + ")-tight: " + why);
  }
  return ConstructionSequence{p.l, deconstruct_node(g, p).node};
}

namespace {

SimpleGraph replay_node(const ConstructionNode& node, SparsityParams p, int& index) {
  const int my_index = index++;
  auto fail = [&](const std::string& why) -> std::invalid_argument {
    return std::invalid_argument("certificate node " + std::to_string(my_index) + ": " + why);
  };
  SimpleGraph g;
  if (node.base) {
    if (!node.leaf_graph) throw fail("base leaf without a graph");
    g = *node.leaf_graph;
    if (!(canonical_form(g) == base_form(*node.base))) throw fail("leaf is not the named base");
  } else if (node.move) {
    if (std::holds_alternative<MoveEdgeJoin>(*node.move)) {
      if (!node.child || !node.right) throw fail("join needs two children");
      SimpleGraph left = replay_node(*node.child, p, index);
      SimpleGraph right = replay_node(*node.right, p, index);
      const auto& join = std::get<MoveEdgeJoin>(*node.move);
      if (join.left_size != left.vertex_count()) throw fail("join left size mismatch");
      try {
        g = apply_edge_join(left, right, join.u, join.v);
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
    } else {
      if (!node.child || node.right) throw fail("unary move needs exactly one child");
      SimpleGraph child = replay_node(*node.child, p, index);
      try {
        g = apply_move(child, *node.move);
      } catch (const std::invalid_argument& e) {
        throw fail(e.what());
      }
    }
  } else {
    throw fail("node carries neither a base nor a move");
  }
  if (g.vertex_count() != node.n) throw fail("vertex count mismatch");
  if (!is_tight(g, p)) throw fail("graph at node is not tight");
  if (canonical_hash(canonical_form(g)) != node.hash) throw fail("canonical hash mismatch");
  return g;
}

}  // namespace

SimpleGraph replay(const ConstructionSequence& seq) {
  if (!seq.root) throw std::invalid_argument("empty certificate");
  SparsityParams p(seq.l);
  int index = 0;
  return replay_node(*seq.root, p, index);
}

// ---- JSON ---------------------------------------------------------------------

namespace {

using nlohmann::json;

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::uint64_t hash_from_hex(const std::string& s) {
  if (s.size() != 16) throw std::invalid_argument("bad hash length");
  std::uint64_t h = 0;
  for (char c : s) {
    h <<= 4;
    if (c >= '0' && c <= '9') h |= static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') h |= static_cast<std::uint64_t>(c - 'a' + 10);
    else throw std::invalid_argument("bad hash digit");
  }
  return h;
}

json node_to_json(const ConstructionNode& node) {
  json j;
  j["n"] = node.n;
  j["hash"] = hash_hex(node.hash);
  if (node.base) {
    j["op"] = "base";
    j["tag"] = base_tag_name(*node.base);
    j["graph6"] = write_graph6(*node.leaf_graph);
  } else {
    j["op"] = "move";
    j["move"] = json::parse(move_to_json(*node.move));
    j["child"] = node_to_json(*node.child);
    if (node.right) j["right"] = node_to_json(*node.right);
  }
  return j;
}

std::unique_ptr<ConstructionNode> node_from_json(const json& j) {
  auto node = std::make_unique<ConstructionNode>();
  node->n = j.at("n").get<int>();
  node->hash = hash_from_hex(j.at("hash").get<std::string>());
  const std::string op = j.at("op").get<std::string>();
  if (op == "base") {
    auto tag = base_tag_from_name(j.at("tag").get<std::string>());
    if (!tag) throw std::invalid_argument("unknown base tag");
    node->base = tag;
    node->leaf_graph = read_graph6(j.at("graph6").get<std::string>());
  } else if (op == "move") {
    node->move = move_from_json(j.at("move").dump());
    node->child = node_from_json(j.at("child"));
    if (j.contains("right")) node->right = node_from_json(j.at("right"));
  } else {
    throw std::invalid_argument("unknown certificate op: " + op);
  }
  return node;
}

}  // namespace

std::string certificate_to_json(const ConstructionSequence& seq) {
  json j;
  j["format"] = "tightgraph-certificate-v1";
  j["l"] = seq.l;
  j["root"] = node_to_json(*seq.root);
  return j.dump();
}

ConstructionSequence certificate_from_json(std::string_view text) {
  json j = json::parse(text.begin(), text.end());
  if (j.at("format").get<std::string>() != "tightgraph-certificate-v1")
    throw std::invalid_argument("unknown certificate format");
  ConstructionSequence seq;
  seq.l = j.at("l").get<int>();
  if (seq.l < 1 || seq.l > 3) throw std::invalid_argument("bad l in certificate");
  seq.root = node_from_json(j.at("root"));
  return seq;
}

}  // namespace tg
