#include "tightgraph/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "tightgraph/graph6.hpp"
#include "tightgraph/moves.hpp"
#include "tightgraph/reduce.hpp"

namespace tg {

int smallest_base_order(SparsityParams p) { return p.l == 3 ? 2 : (p.l == 2 ? 4 : 5); }

namespace {

// every forward image of one parent graph, truncated at n_max
void expand_parent(const SimpleGraph& g, SparsityParams p, int n_max,
                   std::vector<SimpleGraph>& out) {
  const int n = g.vertex_count();
  out.clear();
  if (n + 1 <= n_max) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) out.push_back(apply_h1(g, a, b));
    for (const auto& e : g.edges())
      for (Vertex w = 0; w < n; ++w)
        if (w != e.u && w != e.v) out.push_back(apply_h2(g, e, w));
    if (p.l <= 2) {
      // one endpoint of each edge splits; both orientations, every bipartition
      // of the remaining neighbors. Swapping the sides relabels v1/v2, so the
      // lowest leftover neighbor is pinned to the first side.
      for (const auto& e : g.edges()) {
        for (int dir = 0; dir < 2; ++dir) {
          const Vertex v = dir ? e.v : e.u;
          const Vertex u = dir ? e.u : e.v;
          VertexSet rest;
          for (Vertex x : g.neighbors(v))
            if (x != u) rest.push_back(x);
          const int free = std::max<int>(0, static_cast<int>(rest.size()) - 1);
          for (int mask = 0; mask < (1 << free); ++mask) {
            VertexSet a_side, b_side;
            if (!rest.empty()) a_side.push_back(rest[0]);
            for (int i = 0; i < free; ++i)
              ((mask >> i & 1) ? b_side : a_side).push_back(rest[i + 1]);
            out.push_back(apply_edge_to_k3(g, v, u, a_side, b_side));
          }
        }
      }
    }
  }
  if (p.l <= 2 && n + 3 <= n_max) {
    for (Vertex v = 0; v < n; ++v) {
      const auto& nb = g.neighbors(v);
      const int d = g.degree(v);
      long total = 1;
      for (int i = 0; i < d; ++i) total *= 4;
      for (long code = 0; code < total; ++code) {
        std::vector<std::pair<Vertex, int>> assignment;
        long c = code;
        for (int i = 0; i < d; ++i) {
          assignment.emplace_back(nb[i], static_cast<int>(c & 3));
          c >>= 2;
        }
        out.push_back(apply_vertex_to_k4(g, v, assignment));
      }
    }
  }
}

}  // namespace

CorpusByN generate_by_moves(int n_max, SparsityParams p, int jobs) {
  jobs = std::max(1, jobs);
  std::map<int, std::unordered_set<CanonicalForm>> seen;
  auto insert_graph = [&](const SimpleGraph& g) {
    seen[g.vertex_count()].insert(canonical_form(g));
  };
  if (p.l == 3) {
    if (n_max >= 2) insert_graph(base_graph(BaseTag::k2));
  } else if (p.l == 2) {
    if (n_max >= 4) insert_graph(base_graph(BaseTag::k4));
  } else {
    if (n_max >= 5) insert_graph(base_graph(BaseTag::k5_minus_edge));
    if (n_max >= 6) insert_graph(base_graph(BaseTag::glued_k4s));
  }

  std::mutex sink_mutex;
  for (int n = smallest_base_order(p); n <= n_max; ++n) {
    auto it = seen.find(n);
    if (it == seen.end()) continue;
    std::vector<SimpleGraph> parents;
    parents.reserve(it->second.size());
    for (const auto& f : it->second) parents.push_back(from_canonical(f));

    auto expand_range = [&](size_t begin, size_t step) {
      std::vector<SimpleGraph> children;
      std::vector<std::pair<int, CanonicalForm>> local;
      for (size_t i = begin; i < parents.size(); i += step) {
        expand_parent(parents[i], p, n_max, children);
        for (const auto& c : children) local.emplace_back(c.vertex_count(), canonical_form(c));
      }
      std::lock_guard<std::mutex> lock(sink_mutex);
      for (auto& [cn, form] : local) seen[cn].insert(std::move(form));
    };
    if (jobs == 1 || parents.size() < 4) {
      expand_range(0, 1);
    } else {
      std::vector<std::thread> workers;
      for (int t = 0; t < jobs; ++t) workers.emplace_back(expand_range, t, jobs);
      for (auto& w : workers) w.join();
    }

    // edge joins: this level against every completed level of equal or
    // smaller order (both sides are final once their level is reached)
    if (p.l == 1) {
      for (int m = smallest_base_order(p); m <= n; ++m) {
        if (n + m > n_max) continue;
        auto jt = seen.find(m);
        if (jt == seen.end()) continue;
        std::vector<SimpleGraph> left(parents);
        std::vector<SimpleGraph> rights;
        for (const auto& f : jt->second) rights.push_back(from_canonical(f));
        for (size_t i = 0; i < left.size(); ++i) {
          const size_t j0 = (m == n) ? i : 0;
          for (size_t j = j0; j < rights.size(); ++j)
            for (Vertex u = 0; u < left[i].vertex_count(); ++u)
              for (Vertex v = 0; v < rights[j].vertex_count(); ++v)
                insert_graph(apply_edge_join(left[i], rights[j], u, v));
        }
      }
    }
  }

  CorpusByN out;
  for (auto& [n, forms] : seen) {
    if (n > n_max || forms.empty()) continue;
    std::vector<CanonicalForm> sorted(forms.begin(), forms.end());
    std::sort(sorted.begin(), sorted.end());
    out.emplace(n, std::move(sorted));
  }
  return out;
}

std::vector<CanonicalForm> generate_brute_force(int n, SparsityParams p) {
  std::set<CanonicalForm> found;
  const int target = 2 * n - p.l;
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  if (target < 0 || target > static_cast<int>(pairs.size())) return {};

  std::vector<Edge> chosen;
  // DFS over pair indices; a pebble-rejected edge cannot appear in any
  // sparse superset, so that branch is just skipped
  auto rec = [&](auto&& self, size_t next, const PebbleState& st) -> void {
    if (static_cast<int>(chosen.size()) == target) {
      found.insert(canonical_form(SimpleGraph(n, chosen)));
      return;
    }
    const int missing = target - static_cast<int>(chosen.size());
    if (pairs.size() - next < static_cast<size_t>(missing)) return;
    for (size_t i = next; i + missing <= pairs.size(); ++i) {
      PebbleState copy = st;
      if (!copy.insert_edge(pairs[i].u, pairs[i].v, p.l)) continue;
      chosen.push_back(pairs[i]);
      self(self, i + 1, copy);
      chosen.pop_back();
    }
  };
  rec(rec, 0, PebbleState(n, p.k));
  return {found.begin(), found.end()};
}

CompareReport compare_generators(int n_max, SparsityParams p, int jobs) {
  CompareReport rep;
  const auto by_moves = generate_by_moves(n_max, p, jobs);
  for (int n = smallest_base_order(p); n <= n_max; ++n) {
    const auto brute = generate_brute_force(n, p);
    std::vector<CanonicalForm> moves;
    if (auto it = by_moves.find(n); it != by_moves.end()) moves = it->second;
    rep.counts[n] = {static_cast<long>(moves.size()), static_cast<long>(brute.size())};
    if (moves != brute) {
      rep.equal = false;
      std::vector<CanonicalForm> diff;
      std::set_symmetric_difference(moves.begin(), moves.end(), brute.begin(), brute.end(),
                                    std::back_inserter(diff));
      for (const auto& f : diff) rep.mismatches.push_back(write_graph6(from_canonical(f)));
    }
  }
  return rep;
}

std::vector<SimpleGraph> decode_level(const std::vector<CanonicalForm>& forms) {
  std::vector<SimpleGraph> out;
  out.reserve(forms.size());
  for (const auto& f : forms) out.push_back(from_canonical(f));
  return out;
}

}  // namespace tg
