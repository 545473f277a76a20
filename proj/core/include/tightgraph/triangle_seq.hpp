#pragma once

#include <array>
#include <string>
#include <vector>

#include "tightgraph/graph.hpp"
#include "tightgraph/sparsity.hpp"

namespace tg {

// Nested subgraphs M_3 c M_4 c ... c M_n of a host graph: M_3 is a triangle;
// step i adds one outside vertex v_i and the two edges v_i a_i, v_i b_i where
// a_i b_i is an edge of M_{i-1} lying in exactly one triangle of M_{i-1}.
struct TriangleStep {
  Vertex v;   // vertex added
  Edge base;  // the single-triangle edge it attaches to
};

struct TriangleSequence {
  std::array<Vertex, 3> seed;  // sorted
  std::vector<TriangleStep> steps;

  int length() const { return 3 + static_cast<int>(steps.size()); }
  // M_i pieces, host labels preserved, 3 <= i <= length()
  VertexSet vertices_at(int i) const;
  std::vector<Edge> edges_at(int i) const;
};

// Deterministic growth: always the lowest eligible outside vertex, then the
// lexicographically first eligible attachment edge; stops when no extension
// exists in g. Throws if the seed does not induce a triangle.
TriangleSequence grow_maximal(const SimpleGraph& g, const std::array<Vertex, 3>& seed);

// Edges of M_i lying in exactly one triangle of M_i.
std::vector<Edge> s_edges(const TriangleSequence& seq, int i);

// Chords are edges of the induced graph [M_n] missing from M_n. For each
// chord, the S(M_n) edges that share a triangle of [M_n] with it.
struct ChordReport {
  std::vector<Edge> chords;
  std::vector<std::vector<Edge>> per_chord;
  std::vector<Edge> c_union;
};
ChordReport chord_report(const SimpleGraph& g, const TriangleSequence& seq);

// One of the two closure outcomes of a tight graph that contains a triangle:
// either some triangle merge is allowable, or every triangle edge lies in at
// least two triangles (and then every triangle sits inside a K4, etc.).
enum class TriangleClosure { k3_to_edge_available, all_triangle_edges_doubled };
TriangleClosure classify_closure(const SimpleGraph& g, SparsityParams p);

// ---- structural verification over a corpus ----------------------------------

struct LemmaReport {
  std::string lemma;  // short property slug
  long instances_checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// Per-graph checks; each returns failure descriptions (empty means pass).
std::vector<std::string> check_sequence_counts(const SimpleGraph& g, const TriangleSequence& s);
std::vector<std::string> check_s_cycle(const SimpleGraph& g, const TriangleSequence& s);
std::vector<std::string> check_interior_separation(const SimpleGraph& g,
                                                   const TriangleSequence& s);
std::vector<std::string> check_reseed_spans(const SimpleGraph& g, const TriangleSequence& s);
std::vector<std::string> check_chord_bound(const SimpleGraph& g, const TriangleSequence& s);
std::vector<std::string> check_degree_identity(const SimpleGraph& g, SparsityParams p);
std::vector<std::string> check_closure_dichotomy(const SimpleGraph& g, SparsityParams p);
std::vector<std::string> check_doubled_closure(const SimpleGraph& g, SparsityParams p);

// Run everything over a corpus of tight graphs (all seeds, all checks);
// reports are JSON-serializable via report_to_json.
std::vector<LemmaReport> verify_structure_suite(const std::vector<SimpleGraph>& corpus,
                                                SparsityParams p, int jobs = 1);

std::string report_to_json(const LemmaReport& r);

}  // namespace tg
