#include "tightgraph/triangle_seq.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

#include "tightgraph/canonical.hpp"
#include "tightgraph/graph6.hpp"
#include "tightgraph/moves.hpp"

namespace tg {

namespace {

// adjacency of a subgraph given by an explicit edge list, host labels
struct SubAdj {
  std::map<Vertex, VertexSet> adj;
  explicit SubAdj(const std::vector<Edge>& edges) {
    for (const auto& e : edges) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
  }
  bool has(Vertex a, Vertex b) const {
    auto it = adj.find(a);
    return it != adj.end() && std::binary_search(it->second.begin(), it->second.end(), b);
  }
};

std::vector<Edge> single_triangle_edges(const std::vector<Edge>& edges) {
  SubAdj sub(edges);
  std::vector<Edge> out;
  for (const auto& e : edges) {
    int triangles = 0;
    for (Vertex w : sub.adj[e.u])
      if (w != e.v && sub.has(w, e.v)) ++triangles;
    if (triangles == 1) out.push_back(e);
  }
  return out;
}

std::string failure_tag(const SimpleGraph& g, const TriangleSequence& s) {
  return write_graph6(g) + " seed=(" + std::to_string(s.seed[0]) + "," +
         std::to_string(s.seed[1]) + "," + std::to_string(s.seed[2]) + ")";
}

}  // namespace

VertexSet TriangleSequence::vertices_at(int i) const {
  if (i < 3 || i > length()) throw std::out_of_range("sequence index");
  VertexSet out(seed.begin(), seed.end());
  for (int j = 0; j < i - 3; ++j) out.push_back(steps[j].v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> TriangleSequence::edges_at(int i) const {
  if (i < 3 || i > length()) throw std::out_of_range("sequence index");
  std::vector<Edge> out = {make_edge(seed[0], seed[1]), make_edge(seed[0], seed[2]),
                           make_edge(seed[1], seed[2])};
  for (int j = 0; j < i - 3; ++j) {
    out.push_back(make_edge(steps[j].v, steps[j].base.u));
    out.push_back(make_edge(steps[j].v, steps[j].base.v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TriangleSequence grow_maximal(const SimpleGraph& g, const std::array<Vertex, 3>& seed) {
  std::array<Vertex, 3> s = seed;
  std::sort(s.begin(), s.end());
  if (!(g.adjacent(s[0], s[1]) && g.adjacent(s[0], s[2]) && g.adjacent(s[1], s[2])))
    throw std::invalid_argument("seed does not induce a triangle");
  TriangleSequence seq{s, {}};
  std::vector<char> in_m(g.vertex_count(), 0);
  for (Vertex v : s) in_m[v] = 1;
  std::vector<Edge> edges = seq.edges_at(3);
  while (true) {
    std::vector<Edge> attach = single_triangle_edges(edges);
    std::sort(attach.begin(), attach.end());
    bool extended = false;
    for (Vertex v = 0; v < g.vertex_count() && !extended; ++v) {
      if (in_m[v]) continue;
      for (const auto& e : attach) {
        if (g.adjacent(v, e.u) && g.adjacent(v, e.v)) {
          seq.steps.push_back({v, e});
          in_m[v] = 1;
          edges.push_back(make_edge(v, e.u));
          edges.push_back(make_edge(v, e.v));
          extended = true;
          break;
        }
      }
    }
    if (!extended) return seq;
  }
}

std::vector<Edge> s_edges(const TriangleSequence& seq, int i) {
  auto out = single_triangle_edges(seq.edges_at(i));
  std::sort(out.begin(), out.end());
  return out;
}

ChordReport chord_report(const SimpleGraph& g, const TriangleSequence& seq) {
  const int n = seq.length();
  const VertexSet verts = seq.vertices_at(n);
  const auto m_edges = seq.edges_at(n);
  const std::set<Edge> m_set(m_edges.begin(), m_edges.end());
  std::vector<char> in_m(g.vertex_count(), 0);
  for (Vertex v : verts) in_m[v] = 1;

  ChordReport rep;
  for (const auto& e : g.edges())
    if (in_m[e.u] && in_m[e.v] && !m_set.count(e)) rep.chords.push_back(e);

  const auto s_set = s_edges(seq, n);
  std::set<Edge> c_union;
  for (const auto& chord : rep.chords) {
    std::vector<Edge> ci;
    for (const auto& f : s_set) {
      // triangle on chord+f: they share a vertex and the far ends are adjacent
      Vertex shared = -1, x = -1, y = -1;
      if (chord.u == f.u) shared = chord.u, x = chord.v, y = f.v;
      else if (chord.u == f.v) shared = chord.u, x = chord.v, y = f.u;
      else if (chord.v == f.u) shared = chord.v, x = chord.u, y = f.v;
      else if (chord.v == f.v) shared = chord.v, x = chord.u, y = f.u;
      if (shared < 0 || x == y) continue;
      if (g.adjacent(x, y)) {  // closing edge lies in [M_n] since x,y are in M_n
        ci.push_back(f);
        c_union.insert(f);
      }
    }
    rep.per_chord.push_back(std::move(ci));
  }
  rep.c_union.assign(c_union.begin(), c_union.end());
  return rep;
}

// ---- per-graph checks --------------------------------------------------------

std::vector<std::string> check_sequence_counts(const SimpleGraph& g, const TriangleSequence& s) {
  std::vector<std::string> fails;
  for (int i = 3; i <= s.length(); ++i) {
    if (static_cast<int>(s.vertices_at(i).size()) != i)
      fails.push_back(failure_tag(g, s) + ": |V(M_" + std::to_string(i) + ")| != i");
    if (static_cast<int>(s.edges_at(i).size()) != 2 * i - 3)
      fails.push_back(failure_tag(g, s) + ": |E(M_" + std::to_string(i) + ")| != 2i-3");
  }
  // definitional: each attachment edge was a single-triangle edge one step back
  for (size_t j = 0; j < s.steps.size(); ++j) {
    auto prev = s_edges(s, 3 + static_cast<int>(j));
    if (!std::binary_search(prev.begin(), prev.end(), s.steps[j].base))
      fails.push_back(failure_tag(g, s) + ": step " + std::to_string(j) +
                      " attaches outside S(M_{i-1})");
  }
  return fails;
}

std::vector<std::string> check_s_cycle(const SimpleGraph& g, const TriangleSequence& s) {
  std::vector<std::string> fails;
  for (int i = 3; i <= s.length(); ++i) {
    const auto sset = s_edges(s, i);
    const auto verts = s.vertices_at(i);
    bool ok = static_cast<int>(sset.size()) == i;
    std::map<Vertex, int> deg;
    for (const auto& e : sset) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (Vertex v : verts) ok = ok && deg[v] == 2;
    if (ok) {  // connectivity: walk the 2-regular graph from one vertex
      std::set<Vertex> seen;
      Vertex start = verts[0], prev = -1, cur = start;
      SubAdj sub(sset);
      do {
        seen.insert(cur);
        auto& nb = sub.adj[cur];
        Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      } while (cur != start && static_cast<int>(seen.size()) <= i);
      ok = static_cast<int>(seen.size()) == i;
    }
    if (!ok)
      fails.push_back(failure_tag(g, s) + ": S(M_" + std::to_string(i) +
                      ") is not a spanning cycle");
  }
  return fails;
}

std::vector<std::string> check_interior_separation(const SimpleGraph& g,
                                                   const TriangleSequence& s) {
  std::vector<std::string> fails;
  for (int i = 4; i <= s.length(); ++i) {
    const auto edges = s.edges_at(i);
    const auto sset = s_edges(s, i);
    const std::set<Edge> s_lookup(sset.begin(), sset.end());
    const auto verts = s.vertices_at(i);
    SubAdj sub(sset);
    for (const auto& e : edges) {
      if (s_lookup.count(e)) continue;
      // components of M_i minus {e.u, e.v}
      std::map<Vertex, int> comp;
      int ncomp = 0;
      for (Vertex v : verts) {
        if (v == e.u || v == e.v || comp.count(v)) continue;
        std::vector<Vertex> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
          Vertex x = stack.back();
          stack.pop_back();
          for (const auto& e2 : edges) {
            if (e2.u != x && e2.v != x) continue;
            Vertex y = e2.u == x ? e2.v : e2.u;
            if (y == e.u || y == e.v || comp.count(y)) continue;
            comp[y] = ncomp;
            stack.push_back(y);
          }
        }
        ++ncomp;
      }
      if (ncomp < 2) {
        fails.push_back(failure_tag(g, s) + ": interior edge " + std::to_string(e.u) + "-" +
                        std::to_string(e.v) + " does not separate M_" + std::to_string(i));
        continue;
      }
      for (Vertex x : {e.u, e.v}) {
        const auto& ring = sub.adj[x];  // the two cycle neighbors of x
        if (ring.size() != 2 || comp[ring[0]] == comp[ring[1]])
          fails.push_back(failure_tag(g, s) + ": cycle neighbors of " + std::to_string(x) +
                          " not separated by " + std::to_string(e.u) + "-" +
                          std::to_string(e.v));
      }
    }
  }
  return fails;
}

std::vector<std::string> check_reseed_spans(const SimpleGraph& g, const TriangleSequence& s) {
  std::vector<std::string> fails;
  const int n = s.length();
  const auto verts = s.vertices_at(n);
  std::vector<int> pos(g.vertex_count(), -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<Edge> relabeled;
  for (const auto& e : s.edges_at(n)) relabeled.push_back(make_edge(pos[e.u], pos[e.v]));
  SimpleGraph host(n, std::move(relabeled));
  for (const auto& tri : list_triangles(host)) {
    TriangleSequence re = grow_maximal(host, tri);
    if (re.length() != n)
      fails.push_back(failure_tag(g, s) + ": reseeding at (" + std::to_string(verts[tri[0]]) +
                      "," + std::to_string(verts[tri[1]]) + "," + std::to_string(verts[tri[2]]) +
                      ") stalls at " + std::to_string(re.length()) + " of " + std::to_string(n));
  }
  return fails;
}

std::vector<std::string> check_chord_bound(const SimpleGraph& g, const TriangleSequence& s) {
  std::vector<std::string> fails;
  if (s.length() <= 4) return fails;
  const auto rep = chord_report(g, s);
  if (rep.chords.empty()) return fails;
  if (rep.c_union.size() > 3 * rep.chords.size())
    fails.push_back(failure_tag(g, s) + ": |C| = " + std::to_string(rep.c_union.size()) +
                    " exceeds 3m = " + std::to_string(3 * rep.chords.size()));
  return fails;
}

std::vector<std::string> check_degree_identity(const SimpleGraph& g, SparsityParams p) {
  long sum = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) sum += 4 - g.degree(v);
  if (sum != 2 * p.l)
    return {write_graph6(g) + ": sum(4-d(i)) = " + std::to_string(sum) + " != " +
            std::to_string(2 * p.l)};
  return {};
}

namespace {

bool triangle_edges_doubled(const SimpleGraph& g) {
  std::map<Edge, int> tri_count;
  for (const auto& t : list_triangles(g)) {
    ++tri_count[make_edge(t[0], t[1])];
    ++tri_count[make_edge(t[0], t[2])];
    ++tri_count[make_edge(t[1], t[2])];
  }
  for (const auto& [e, c] : tri_count)
    if (c == 1) return false;
  return true;
}

}  // namespace

std::vector<std::string> check_closure_dichotomy(const SimpleGraph& g, SparsityParams p) {
  if (list_triangles(g).empty()) return {};
  const bool doubled = triangle_edges_doubled(g);
  const bool merge_available = find_k3_to_edge(g, p).has_value();
  if (merge_available == doubled)
    return {write_graph6(g) + ": closure dichotomy violated (doubled=" +
            std::to_string(doubled) + ", merge=" + std::to_string(merge_available) + ")"};
  return {};
}

std::vector<std::string> check_doubled_closure(const SimpleGraph& g, SparsityParams p) {
  std::vector<std::string> fails;
  const auto triangles = list_triangles(g);
  if (triangles.empty() || !triangle_edges_doubled(g)) return fails;

  // maximal sequences stay short: n <= 4 for l=2, n <= 6 for l=1
  const int bound = p.l == 2 ? 4 : 6;
  for (const auto& tri : triangles) {
    const int len = grow_maximal(g, tri).length();
    if (len > bound)
      fails.push_back(write_graph6(g) + ": doubled closure sequence of length " +
                      std::to_string(len) + " from (" + std::to_string(tri[0]) + "," +
                      std::to_string(tri[1]) + "," + std::to_string(tri[2]) + ")");
  }

  const auto quads = list_k4s(g);
  auto in_quad = [](const std::array<Vertex, 4>& q, Vertex v) {
    return v == q[0] || v == q[1] || v == q[2] || v == q[3];
  };
  for (const auto& tri : triangles) {
    bool in_k4 = false;
    for (const auto& q : quads)
      in_k4 = in_k4 || (in_quad(q, tri[0]) && in_quad(q, tri[1]) && in_quad(q, tri[2]));
    if (!in_k4)
      fails.push_back(write_graph6(g) + ": triangle (" + std::to_string(tri[0]) + "," +
                      std::to_string(tri[1]) + "," + std::to_string(tri[2]) +
                      ") lies in no K4 despite doubled closure");
  }

  // with no allowable contraction either, each triangle sits in a glued pair
  // of K4s (sharing an edge or a triangle)
  if (!find_k4_to_vertex(g, p) && !isomorphic(g, complete_graph(4))) {
    std::vector<char> paired(quads.size(), 0);
    for (size_t i = 0; i < quads.size(); ++i)
      for (size_t j = i + 1; j < quads.size(); ++j) {
        int common = 0;
        for (Vertex v : quads[i]) common += in_quad(quads[j], v);
        if (common == 2 || common == 3) paired[i] = paired[j] = 1;
      }
    for (const auto& tri : triangles) {
      bool covered = false;
      for (size_t i = 0; i < quads.size() && !covered; ++i)
        covered = paired[i] && in_quad(quads[i], tri[0]) && in_quad(quads[i], tri[1]) &&
                  in_quad(quads[i], tri[2]);
      if (!covered)
        fails.push_back(write_graph6(g) + ": triangle (" + std::to_string(tri[0]) + "," +
                        std::to_string(tri[1]) + "," + std::to_string(tri[2]) +
                        ") lies in no K5-e / K4K4 copy");
    }
  }
  return fails;
}

TriangleClosure classify_closure(const SimpleGraph& g, SparsityParams p) {
  if (list_triangles(g).empty()) throw std::invalid_argument("graph contains no triangle");
  if (!triangle_edges_doubled(g)) {
    if (!find_k3_to_edge(g, p))
      throw std::logic_error("closure dichotomy violated: no merge despite single triangle edge");
    return TriangleClosure::k3_to_edge_available;
  }
  if (find_k3_to_edge(g, p))
    throw std::logic_error("closure dichotomy violated: merge found despite doubled edges");
  auto fails = check_doubled_closure(g, p);
  if (!fails.empty()) throw std::logic_error("doubled closure property violated: " + fails[0]);
  return TriangleClosure::all_triangle_edges_doubled;
}

// ---- suite --------------------------------------------------------------------

std::vector<LemmaReport> verify_structure_suite(const std::vector<SimpleGraph>& corpus,
                                                SparsityParams p, int jobs) {
  std::vector<LemmaReport> reports = {
      {"sequence-counts", 0, {}},        {"s-edge-spanning-cycle", 0, {}},
      {"interior-edge-separation", 0, {}}, {"reseed-reaches-maximal", 0, {}},
      {"chord-bound", 0, {}},            {"degree-identity", 0, {}},
      {"closure-dichotomy", 0, {}},      {"doubled-closure", 0, {}},
  };
  auto run_one = [&](const SimpleGraph& g, std::vector<LemmaReport>& local) {
    for (const auto& tri : list_triangles(g)) {
      const TriangleSequence s = grow_maximal(g, tri);
      auto add = [&](int idx, std::vector<std::string> fails) {
        ++local[idx].instances_checked;
        for (auto& f : fails) local[idx].failures.push_back(std::move(f));
      };
      add(0, check_sequence_counts(g, s));
      add(1, check_s_cycle(g, s));
      add(2, check_interior_separation(g, s));
      add(3, check_reseed_spans(g, s));
      add(4, check_chord_bound(g, s));
    }
    ++local[5].instances_checked;
    for (auto& f : check_degree_identity(g, p)) local[5].failures.push_back(std::move(f));
    if (p.l <= 2) {
      ++local[6].instances_checked;
      for (auto& f : check_closure_dichotomy(g, p)) local[6].failures.push_back(std::move(f));
      ++local[7].instances_checked;
      for (auto& f : check_doubled_closure(g, p)) local[7].failures.push_back(std::move(f));
    }
  };

  jobs = std::max(1, jobs);
  if (jobs == 1 || corpus.size() < 2) {
    for (const auto& g : corpus) run_one(g, reports);
    return reports;
  }
  std::vector<std::vector<LemmaReport>> partial(jobs, reports);
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&, t] {
      for (size_t i = t; i < corpus.size(); i += jobs) run_one(corpus[i], partial[t]);
    });
  for (auto& w : workers) w.join();
  for (const auto& part : partial)
    for (size_t i = 0; i < reports.size(); ++i) {
      reports[i].instances_checked += part[i].instances_checked;
      reports[i].failures.insert(reports[i].failures.end(), part[i].failures.begin(),
                                 part[i].failures.end());
    }
  return reports;
}

std::string report_to_json(const LemmaReport& r) {
  nlohmann::json j{
      {"lemma", r.lemma}, {"instances_checked", r.instances_checked}, {"failures", r.failures}};
  return j.dump();
}

}  // namespace tg
