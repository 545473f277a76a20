#include "tightgraph/sparsity.hpp"

#include <algorithm>
#include <cassert>

namespace tg {

PebbleState::PebbleState(int n, int k)
    : k_(k), pebbles_(n, k), out_(n), seen_(n, 0), parent_(n, -1) {
  assert(k >= 1 && k <= 4);
}

// DFS along the orientation from src for a vertex with a free pebble,
// lowest index first. The other endpoint of the pending edge is walled off:
// it neither donates nor relays (the run from the other side covers what
// lies behind it). On success the path is reversed and the pebble lands on
// src.
bool PebbleState::pull_pebble(Vertex src, Vertex other) {
  ++stamp_;
  seen_[src] = stamp_;
  if (other >= 0) seen_[other] = stamp_;
  std::vector<Vertex> stack{src};
  parent_[src] = -1;
  Vertex found = -1;
  std::vector<Vertex> nbrs;
  while (!stack.empty() && found < 0) {
    Vertex x = stack.back();
    stack.pop_back();
    nbrs.assign(out_[x].begin(), out_[x].end());
    std::sort(nbrs.begin(), nbrs.end());
    size_t first_new = stack.size();
    for (Vertex y : nbrs) {
      if (seen_[y] == stamp_) continue;
      seen_[y] = stamp_;
      parent_[y] = x;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack.push_back(y);
    }
    std::reverse(stack.begin() + first_new, stack.end());  // pop lowest first
  }
  if (found < 0) return false;
  // reverse the path found -> src
  Vertex cur = found;
  while (parent_[cur] != -1) {
    Vertex p = parent_[cur];
    auto it = std::find(out_[p].begin(), out_[p].end(), cur);
    assert(it != out_[p].end());
    out_[p].erase(it);
    out_[cur].push_back(p);
    cur = p;
  }
  --pebbles_[found];
  ++pebbles_[src];
  return true;
}

bool PebbleState::gather(Vertex u, Vertex v, int need) {
  while (pebbles_[u] + pebbles_[v] < need) {
    if (!pull_pebble(u, v) && !pull_pebble(v, u)) return false;
  }
  return true;
}

bool PebbleState::insert_edge(Vertex u, Vertex v, int l) {
  assert(u != v);
  if (!gather(u, v, l + 1)) return false;
  if (pebbles_[u] > 0) {
    --pebbles_[u];
    out_[u].push_back(v);
  } else {
    --pebbles_[v];
    out_[v].push_back(u);
  }
  ++accepted_;
  check_invariants();
  return true;
}

void PebbleState::check_invariants() const {
#ifndef NDEBUG
  long total = 0;
  for (size_t v = 0; v < pebbles_.size(); ++v) {
    assert(pebbles_[v] >= 0 && pebbles_[v] <= k_);
    assert(pebbles_[v] + static_cast<int>(out_[v].size()) == k_);
    total += pebbles_[v];
  }
  assert(total == static_cast<long>(k_ * pebbles_.size()) - accepted_);
#endif
}

namespace {

// Run the game over all edges except those at `skip`; nullopt (plus the edge)
// when an insertion is refused.
std::optional<PebbleState> play_all(const SimpleGraph& g, SparsityParams p, Vertex skip,
                                    Edge* refused) {
  PebbleState st(g.vertex_count(), p.k);
  for (const auto& e : g.edges()) {
    if (e.u == skip || e.v == skip) continue;
    if (!st.insert_edge(e.u, e.v, p.l)) {
      if (refused) *refused = e;
      return std::nullopt;
    }
  }
  return st;
}

}  // namespace

bool is_sparse(const SimpleGraph& g, SparsityParams p) {
  return play_all(g, p, -1, nullptr).has_value();
}

PebbleState play_pebbles(const SimpleGraph& g, SparsityParams p, Vertex skip) {
  Edge refused{};
  auto st = play_all(g, p, skip, &refused);
  if (!st)
    throw std::invalid_argument("edge set is not (" + std::to_string(p.k) + "," +
                                std::to_string(p.l) + ")-sparse; refused edge " +
                                std::to_string(refused.u) + "-" + std::to_string(refused.v));
  return *std::move(st);
}

bool is_tight(const SimpleGraph& g, SparsityParams p) {
  return freedom_count(g) == p.l && is_sparse(g, p);
}

bool blocker_exists(const SimpleGraph& g, Edge ab, Vertex c, SparsityParams p) {
  if (!g.adjacent(ab.u, ab.v)) throw std::invalid_argument("ab is not an edge of g");
  if (c == ab.u || c == ab.v || c < 0 || c >= g.vertex_count())
    throw std::invalid_argument("c must be a vertex distinct from a and b");
  auto st = play_all(g, p, c, nullptr);
  if (!st) throw std::invalid_argument("graph minus c is not sparse; blocker query undefined");
  return !st->gather(ab.u, ab.v, p.l + 1);
}

bool edge_insertable(const SimpleGraph& g, Vertex u, Vertex v, SparsityParams p) {
  if (g.adjacent(u, v)) throw std::invalid_argument("edge already present");
  if (u == v || u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw std::invalid_argument("bad endpoints");
  auto st = play_all(g, p, -1, nullptr);
  if (!st) throw std::invalid_argument("graph is not sparse");
  return st->gather(u, v, p.l + 1);
}

std::optional<VertexSet> blocker_witness(const SimpleGraph& g, Edge ab, Vertex c,
                                         SparsityParams p) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("witness search is exhaustive; needs n <= 20");
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> ab.u & 1) || !(mask >> ab.v & 1) || (mask >> c & 1)) continue;
    int vtx = 0, edges = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) ++vtx;
    for (const auto& e : g.edges())
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++edges;
    if (edges == 0 || 2 * vtx - edges != p.l) continue;
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (is_sparse(induced(g, s), p)) return s;
  }
  return std::nullopt;
}

std::string SparsityViolation::describe() const {
  std::string out = "sparsity violated";
  if (vertices) {
    out += " on vertex set {";
    for (size_t i = 0; i < vertices->size(); ++i) {
      if (i) out += ",";
      out += std::to_string((*vertices)[i]);
    }
    out += "}";
  } else if (failing_edge) {
    out += "; pebble game refused edge " + std::to_string(failing_edge->u) + "-" +
           std::to_string(failing_edge->v);
  }
  return out;
}

std::optional<SparsityViolation> find_violation(const SimpleGraph& g, SparsityParams p) {
  Edge refused{};
  if (play_all(g, p, -1, &refused)) return std::nullopt;
  SparsityViolation v;
  const int n = g.vertex_count();
  if (n <= 12) {
    // smallest violating vertex set, by popcount then mask order
    int best_sz = n + 1;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int vtx = 0, edges = 0;
      for (int x = 0; x < n; ++x)
        if (mask >> x & 1) ++vtx;
      if (vtx >= best_sz) continue;
      for (const auto& e : g.edges())
        if ((mask >> e.u & 1) && (mask >> e.v & 1)) ++edges;
      if (edges >= 1 && 2 * vtx - edges < p.l) {
        best_sz = vtx;
        best_mask = mask;
      }
    }
    VertexSet s;
    for (int x = 0; x < n; ++x)
      if (best_mask >> x & 1) s.push_back(x);
    v.vertices = std::move(s);
  } else {
    v.failing_edge = refused;
  }
  return v;
}

}  // namespace tg
