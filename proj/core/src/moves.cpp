#include "tightgraph/moves.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include <json.hpp>

namespace tg {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_vertex(const SimpleGraph& g, Vertex v, const char* msg) {
  require(v >= 0 && v < g.vertex_count(), msg);
}

}  // namespace

SimpleGraph apply_h1(const SimpleGraph& g, Vertex a, Vertex b) {
  require(a != b, "h1 attachment vertices must differ");
  require_vertex(g, a, "h1 vertex a out of range");
  require_vertex(g, b, "h1 vertex b out of range");
  const Vertex x = g.vertex_count();
  auto edges = g.edges();
  edges.push_back({a, x});
  edges.push_back({b, x});
  SimpleGraph out(x + 1, std::move(edges));
  assert(freedom_count(out) == freedom_count(g));
  return out;
}

SimpleGraph apply_h2(const SimpleGraph& g, Edge uv, Vertex w) {
  require(g.adjacent(uv.u, uv.v), "h2 split edge not present");
  require_vertex(g, w, "h2 third vertex out of range");
  require(w != uv.u && w != uv.v, "h2 third vertex must avoid the split edge");
  const Vertex x = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 2);
  const Edge split = make_edge(uv.u, uv.v);
  for (const auto& e : g.edges())
    if (!(e == split)) edges.push_back(e);
  edges.push_back({uv.u, x});
  edges.push_back({uv.v, x});
  edges.push_back({w, x});
  SimpleGraph out(x + 1, std::move(edges));
  assert(freedom_count(out) == freedom_count(g));
  return out;
}

SimpleGraph apply_vertex_to_k4(const SimpleGraph& g, Vertex v,
                               const std::vector<std::pair<Vertex, int>>& assignment) {
  require_vertex(g, v, "expanded vertex out of range");
  {
    VertexSet domain;
    for (const auto& [x, slot] : assignment) {
      domain.push_back(x);
      require(slot >= 0 && slot < 4, "assignment slot must be 0..3");
    }
    std::sort(domain.begin(), domain.end());
    require(domain == g.neighbors(v), "assignment domain must be exactly N(v)");
  }
  const int n = g.vertex_count();
  const std::array<Vertex, 4> clique = {v, n, n + 1, n + 2};
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 6);
  for (const auto& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back(e);
  for (const auto& [x, slot] : assignment) edges.push_back(make_edge(x, clique[slot]));
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) edges.push_back(make_edge(clique[i], clique[j]));
  SimpleGraph out(n + 3, std::move(edges));
  assert(freedom_count(out) == freedom_count(g));
  return out;
}

SimpleGraph apply_edge_to_k3(const SimpleGraph& g, Vertex v, Vertex u, const VertexSet& a_side,
                             const VertexSet& b_side) {
  require_vertex(g, v, "split vertex out of range");
  require_vertex(g, u, "anchor vertex out of range");
  require(g.adjacent(u, v), "edge uv not present");
  {
    VertexSet both = a_side;
    both.insert(both.end(), b_side.begin(), b_side.end());
    std::sort(both.begin(), both.end());
    require(std::adjacent_find(both.begin(), both.end()) == both.end(),
            "partition sides must be disjoint");
    VertexSet rest;
    for (Vertex x : g.neighbors(v))
      if (x != u) rest.push_back(x);
    require(both == rest, "partition must cover N(v) minus u exactly");
  }
  const Vertex v2 = g.vertex_count();
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + 2);
  for (const auto& e : g.edges())
    if (e.u != v && e.v != v) edges.push_back(e);
  for (Vertex x : a_side) edges.push_back(make_edge(v, x));
  for (Vertex x : b_side) edges.push_back(make_edge(v2, x));
  edges.push_back(make_edge(u, v));
  edges.push_back(make_edge(u, v2));
  edges.push_back(make_edge(v, v2));
  SimpleGraph out(v2 + 1, std::move(edges));
  assert(freedom_count(out) == freedom_count(g));
  return out;
}

SimpleGraph apply_edge_join(const SimpleGraph& left, const SimpleGraph& right, Vertex u,
                            Vertex v) {
  require_vertex(left, u, "join vertex u out of range");
  require_vertex(right, v, "join vertex v out of range");
  const SparsityParams p1(1);
  require(is_tight(left, p1), "edge join requires a (2,1)-tight left graph");
  require(is_tight(right, p1), "edge join requires a (2,1)-tight right graph");
  const int shift = left.vertex_count();
  std::vector<Edge> edges = left.edges();
  for (const auto& e : right.edges()) edges.push_back({e.u + shift, e.v + shift});
  edges.push_back(make_edge(u, v + shift));
  SimpleGraph out(shift + right.vertex_count(), std::move(edges));
  assert(freedom_count(out) == 1);
  return out;
}

SimpleGraph apply_move(const SimpleGraph& g, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> SimpleGraph {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, MoveH1>) return apply_h1(g, mv.a, mv.b);
        else if constexpr (std::is_same_v<T, MoveH2>) return apply_h2(g, {mv.u, mv.v}, mv.w);
        else if constexpr (std::is_same_v<T, MoveVertexToK4>)
          return apply_vertex_to_k4(g, mv.v, mv.assignment);
        else if constexpr (std::is_same_v<T, MoveEdgeToK3>)
          return apply_edge_to_k3(g, mv.v, mv.u, mv.a_side, mv.b_side);
        else
          throw std::invalid_argument("edge join needs two graphs");
      },
      m);
}

SimpleGraph delete_vertex_swap(const SimpleGraph& g, Vertex x) {
  require_vertex(g, x, "deleted vertex out of range");
  const int top = g.vertex_count() - 1;
  auto map = [&](Vertex t) { return t == top ? x : t; };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges())
    if (e.u != x && e.v != x) edges.push_back(make_edge(map(e.u), map(e.v)));
  return SimpleGraph(top, std::move(edges));
}

std::optional<Vertex> find_inverse_h1(const SimpleGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 2) return v;
  return std::nullopt;
}

std::optional<InverseH2> find_inverse_h2(const SimpleGraph& g, SparsityParams p) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) continue;
    const auto& nb = g.neighbors(v);
    std::vector<Edge> candidates;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (!g.adjacent(nb[i], nb[j])) candidates.push_back(make_edge(nb[i], nb[j]));
    if (candidates.empty()) continue;  // v sits in a K4
    PebbleState st = play_pebbles(g, p, v);
    for (const auto& e : candidates)
      if (st.gather(e.u, e.v, p.l + 1)) return InverseH2{v, e};
  }
  return std::nullopt;
}

std::optional<std::array<Vertex, 4>> find_k4_to_vertex(const SimpleGraph& g, SparsityParams p) {
  if (g.vertex_count() <= 4) return std::nullopt;
  for (const auto& quad : list_k4s(g)) {
    // triangle sharing exactly two vertices with the clique <=> some outside
    // vertex adjacent to two clique members <=> contraction not simple
    bool blocked = false;
    for (Vertex x = 0; x < g.vertex_count() && !blocked; ++x) {
      if (x == quad[0] || x == quad[1] || x == quad[2] || x == quad[3]) continue;
      int hits = 0;
      for (Vertex m : quad) hits += g.adjacent(x, m);
      blocked = hits >= 2;
    }
    if (blocked) continue;
    Reduction red = reduce_k4_to_vertex(g, quad);
    if (!is_tight(red.child, p))
      throw std::logic_error("contraction filter accepted a non-tight contraction");
    return quad;
  }
  return std::nullopt;
}

std::optional<K3ToEdge> find_k3_to_edge(const SimpleGraph& g, SparsityParams p) {
  for (const auto& tri : list_triangles(g)) {
    const std::array<std::pair<Edge, Vertex>, 3> choices = {
        std::pair<Edge, Vertex>{{tri[0], tri[1]}, tri[2]},
        std::pair<Edge, Vertex>{{tri[0], tri[2]}, tri[1]},
        std::pair<Edge, Vertex>{{tri[1], tri[2]}, tri[0]},
    };
    for (const auto& [merge, apex] : choices) {
      // simple unless the merged pair has a second common neighbor
      bool second_common = false;
      for (Vertex d : g.neighbors(merge.u))
        if (d != apex && d != merge.v && g.adjacent(d, merge.v)) {
          second_common = true;
          break;
        }
      if (second_common) continue;
      if (blocker_exists(g, merge, apex, p)) continue;
      K3ToEdge found{tri, merge};
      Reduction red = reduce_k3_to_edge(g, found);
      if (!is_tight(red.child, p))
        throw std::logic_error("merge filter accepted a non-tight merge");
      return found;
    }
  }
  return std::nullopt;
}

namespace {

// bridges by lowlink; returns them sorted
std::vector<Edge> find_bridges(const SimpleGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> bridges;
  int timer = 0;
  // iterative dfs: (vertex, parent, neighbor index)
  std::vector<std::array<int, 3>> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    stack.push_back({root, -1, 0});
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      auto& [v, parent, idx] = stack.back();
      if (idx < g.degree(v)) {
        Vertex to = g.neighbors(v)[idx++];
        if (to == parent) {
          parent = -2;  // skip the tree edge once; parallel edges cannot occur
          continue;
        }
        if (disc[to] >= 0) {
          low[v] = std::min(low[v], disc[to]);
        } else {
          disc[to] = low[to] = timer++;
          stack.push_back({to, v, 0});
        }
      } else {
        const Vertex done = v;
        stack.pop_back();
        if (!stack.empty()) {
          Vertex up = stack.back()[0];
          low[up] = std::min(low[up], low[done]);
          if (low[done] > disc[up]) bridges.push_back(make_edge(up, done));
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace

std::optional<EdgeSeparation> find_edge_separation(const SimpleGraph& g) {
  auto bridges = find_bridges(g);
  if (bridges.empty()) return std::nullopt;
  const Edge b = bridges.front();
  // component of b.u once the bridge is removed
  std::vector<char> in_left(g.vertex_count(), 0);
  std::vector<Vertex> stack{b.u};
  in_left[b.u] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if ((v == b.u && w == b.v) || (v == b.v && w == b.u)) continue;
      if (!in_left[w]) {
        in_left[w] = 1;
        stack.push_back(w);
      }
    }
  }
  EdgeSeparation sep;
  sep.bridge = b;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    (in_left[v] ? sep.left : sep.right).push_back(v);
  assert(is_tight(induced(g, sep.left), SparsityParams(1)));
  assert(is_tight(induced(g, sep.right), SparsityParams(1)));
  return sep;
}

Reduction reduce_inverse_h1(const SimpleGraph& g, Vertex v) {
  require_vertex(g, v, "vertex out of range");
  require(g.degree(v) == 2, "inverse h1 needs a degree-2 vertex");
  const int top = g.vertex_count() - 1;
  auto map = [&](Vertex t) { return t == top ? v : t; };
  const Vertex a = map(g.neighbors(v)[0]), b = map(g.neighbors(v)[1]);
  return Reduction{delete_vertex_swap(g, v), MoveH1{std::min(a, b), std::max(a, b)}};
}

Reduction reduce_inverse_h2(const SimpleGraph& g, const InverseH2& r) {
  require_vertex(g, r.v, "vertex out of range");
  require(g.degree(r.v) == 3, "inverse h2 needs a degree-3 vertex");
  require(!g.adjacent(r.replacement.u, r.replacement.v), "replacement edge already present");
  const auto& nb = g.neighbors(r.v);
  require(std::count(nb.begin(), nb.end(), r.replacement.u) == 1 &&
              std::count(nb.begin(), nb.end(), r.replacement.v) == 1,
          "replacement edge must join neighbors of v");
  Vertex third = -1;
  for (Vertex x : nb)
    if (x != r.replacement.u && x != r.replacement.v) third = x;
  const int top = g.vertex_count() - 1;
  auto map = [&](Vertex t) { return t == top ? r.v : t; };
  SimpleGraph base = delete_vertex_swap(g, r.v);
  auto edges = base.edges();
  edges.push_back(make_edge(map(r.replacement.u), map(r.replacement.v)));
  SimpleGraph child(base.vertex_count(), std::move(edges));
  Edge split = make_edge(map(r.replacement.u), map(r.replacement.v));
  return Reduction{std::move(child), MoveH2{split.u, split.v, map(third)}};
}

Reduction reduce_k4_to_vertex(const SimpleGraph& g, const std::array<Vertex, 4>& k4) {
  for (int i = 0; i < 4; ++i) {
    require_vertex(g, k4[i], "clique vertex out of range");
    for (int j = i + 1; j < 4; ++j)
      require(g.adjacent(k4[i], k4[j]), "vertices do not induce a K4");
  }
  const int n = g.vertex_count();
  auto in_clique = [&](Vertex x) {
    return x == k4[0] || x == k4[1] || x == k4[2] || x == k4[3];
  };
  const Vertex keep = k4[0];
  std::vector<Edge> rewired;
  std::vector<std::pair<Vertex, int>> hit_slot;  // external neighbor -> clique slot
  for (const auto& e : g.edges()) {
    const bool iu = in_clique(e.u), iv = in_clique(e.v);
    if (iu && iv) continue;
    if (!iu && !iv) {
      rewired.push_back(e);
      continue;
    }
    const Vertex outside = iu ? e.v : e.u;
    const Vertex member = iu ? e.u : e.v;
    int slot = 0;
    while (k4[slot] != member) ++slot;
    if (std::any_of(hit_slot.begin(), hit_slot.end(),
                    [&](const auto& pr) { return pr.first == outside; }))
      throw std::invalid_argument(
          "contraction not simple: outside vertex sees two clique members");
    hit_slot.emplace_back(outside, slot);
    rewired.push_back(make_edge(outside, keep));
  }
  // drop the three other clique labels, highest first, refilling from the top
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  int top = n - 1;
  std::array<Vertex, 3> victims = {k4[3], k4[2], k4[1]};
  for (Vertex t : victims) {
    const int t_cur = cur[t];
    for (int x = 0; x < n; ++x) {
      if (cur[x] == t_cur)
        cur[x] = -1;
      else if (cur[x] == top)
        cur[x] = t_cur;
    }
    --top;
  }
  std::vector<Edge> edges;
  edges.reserve(rewired.size());
  for (const auto& e : rewired) edges.push_back(make_edge(cur[e.u], cur[e.v]));
  MoveVertexToK4 fw;
  fw.v = cur[keep];
  for (const auto& [x, slot] : hit_slot) fw.assignment.emplace_back(cur[x], slot);
  std::sort(fw.assignment.begin(), fw.assignment.end());
  return Reduction{SimpleGraph(n - 3, std::move(edges)), std::move(fw)};
}

Reduction reduce_k3_to_edge(const SimpleGraph& g, const K3ToEdge& r) {
  const auto& t = r.triangle;
  require(g.adjacent(t[0], t[1]) && g.adjacent(t[0], t[2]) && g.adjacent(t[1], t[2]),
          "vertices do not induce a triangle");
  const Vertex p = r.merge.u, q = r.merge.v;
  require((p == t[0] || p == t[1] || p == t[2]) && (q == t[0] || q == t[1] || q == t[2]) &&
              p != q,
          "merge pair must lie in the triangle");
  Vertex apex = -1;
  for (Vertex x : t)
    if (x != p && x != q) apex = x;
  const Edge drop1 = make_edge(p, q), drop2 = make_edge(q, apex);
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    if (e == drop1 || e == drop2) continue;
    if (e.u == q || e.v == q) {
      const Vertex z = e.u == q ? e.v : e.u;
      if (g.adjacent(p, z))
        throw std::invalid_argument("merge not simple: shared neighbor besides the apex");
      edges.push_back(make_edge(p, z));
    } else {
      edges.push_back(e);
    }
  }
  const int top = g.vertex_count() - 1;
  auto map = [&](Vertex x) { return x == top ? q : x; };
  std::vector<Edge> mapped;
  mapped.reserve(edges.size());
  for (const auto& e : edges)
    if (e.u != q && e.v != q) mapped.push_back(make_edge(map(e.u), map(e.v)));
  MoveEdgeToK3 fw;
  fw.v = map(p);
  fw.u = map(apex);
  for (Vertex z : g.neighbors(p))
    if (z != q && z != apex) fw.a_side.push_back(map(z));
  for (Vertex z : g.neighbors(q))
    if (z != p && z != apex) fw.b_side.push_back(map(z));
  std::sort(fw.a_side.begin(), fw.a_side.end());
  std::sort(fw.b_side.begin(), fw.b_side.end());
  return Reduction{SimpleGraph(top, std::move(mapped)), std::move(fw)};
}

SplitReduction reduce_edge_separation(const SimpleGraph& g, const EdgeSeparation& s) {
  require(g.adjacent(s.bridge.u, s.bridge.v), "bridge edge not present");
  SplitReduction out;
  out.left = induced(g, s.left);
  out.right = induced(g, s.right);
  const auto rank = [](const VertexSet& set, Vertex v) {
    return static_cast<int>(std::lower_bound(set.begin(), set.end(), v) - set.begin());
  };
  VertexSet left_sorted = s.left, right_sorted = s.right;
  std::sort(left_sorted.begin(), left_sorted.end());
  std::sort(right_sorted.begin(), right_sorted.end());
  out.forward = MoveEdgeJoin{static_cast<int>(s.left.size()), rank(left_sorted, s.bridge.u),
                             rank(right_sorted, s.bridge.v)};
  return out;
}

// ---- JSON -------------------------------------------------------------------

namespace {
using nlohmann::json;

json to_json(const Move& m) {
  return std::visit(
      [](const auto& mv) -> json {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, MoveH1>) {
          return json{{"type", "h1"}, {"a", mv.a}, {"b", mv.b}};
        } else if constexpr (std::is_same_v<T, MoveH2>) {
          return json{{"type", "h2"}, {"u", mv.u}, {"v", mv.v}, {"w", mv.w}};
        } else if constexpr (std::is_same_v<T, MoveVertexToK4>) {
          json asg = json::array();
          for (const auto& [x, slot] : mv.assignment) asg.push_back(json::array({x, slot}));
          return json{{"type", "vertex_to_k4"}, {"v", mv.v}, {"assignment", asg}};
        } else if constexpr (std::is_same_v<T, MoveEdgeToK3>) {
          return json{{"type", "edge_to_k3"},
                      {"v", mv.v},
                      {"u", mv.u},
                      {"a_side", mv.a_side},
                      {"b_side", mv.b_side}};
        } else {
          return json{{"type", "edge_join"},
                      {"left_size", mv.left_size},
                      {"u", mv.u},
                      {"v", mv.v}};
        }
      },
      m);
}

Move parse_move(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "h1") return MoveH1{j.at("a").get<int>(), j.at("b").get<int>()};
  if (type == "h2")
    return MoveH2{j.at("u").get<int>(), j.at("v").get<int>(), j.at("w").get<int>()};
  if (type == "vertex_to_k4") {
    MoveVertexToK4 mv;
    mv.v = j.at("v").get<int>();
    for (const auto& pair : j.at("assignment"))
      mv.assignment.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    return mv;
  }
  if (type == "edge_to_k3") {
    MoveEdgeToK3 mv;
    mv.v = j.at("v").get<int>();
    mv.u = j.at("u").get<int>();
    mv.a_side = j.at("a_side").get<VertexSet>();
    mv.b_side = j.at("b_side").get<VertexSet>();
    return mv;
  }
  if (type == "edge_join")
    return MoveEdgeJoin{j.at("left_size").get<int>(), j.at("u").get<int>(),
                        j.at("v").get<int>()};
  throw std::invalid_argument("unknown move type: " + type);
}

}  // namespace

std::string move_to_json(const Move& m) { return to_json(m).dump(); }

Move move_from_json(std::string_view text) {
  return parse_move(json::parse(text.begin(), text.end()));
}

}  // namespace tg
