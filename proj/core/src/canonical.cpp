#include "tightgraph/canonical.hpp"

#include <algorithm>
#include <cassert>

namespace tg {

namespace {

// Refine a coloring to the coarsest stable one: a vertex's new color is the
// rank of (old color, sorted multiset of neighbor colors). Label-invariant.
void refine(const SimpleGraph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> key(n);
  std::vector<int> order(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& k = key[v];
      k.clear();
      k.push_back(color[v]);
      for (Vertex w : g.neighbors(v)) k.push_back(color[w]);
      std::sort(k.begin() + 1, k.end());
    }
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return key[a] < key[b]; });
    std::vector<int> next(n, 0);
    int classes = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && key[order[i]] != key[order[i - 1]]) ++classes;
      next[order[i]] = classes;
    }
    if (next == color) return;
    color = std::move(next);
  }
}

// Pack the adjacency matrix under the discrete coloring (color = position).
std::string encode(const SimpleGraph& g, const std::vector<int>& color) {
  const int n = g.vertex_count();
  std::vector<int> at(n);  // canonical position -> original vertex
  for (int v = 0; v < n; ++v) at[color[v]] = v;
  std::string out;
  out.reserve(4 + static_cast<size_t>(n) * n / 16 + 2);
  for (int shift = 24; shift >= 0; shift -= 8)
    out.push_back(static_cast<char>((static_cast<unsigned>(n) >> shift) & 0xff));
  int bit = 7;
  unsigned char cur = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.adjacent(at[i], at[j])) cur |= static_cast<unsigned char>(1 << bit);
      if (--bit < 0) {
        out.push_back(static_cast<char>(cur));
        cur = 0;
        bit = 7;
      }
    }
  if (bit != 7) out.push_back(static_cast<char>(cur));
  return out;
}

void search(const SimpleGraph& g, std::vector<int> color, std::string& best,
            std::vector<int>& best_color, bool& have) {
  refine(g, color);
  const int n = g.vertex_count();
  // first color class with more than one member
  std::vector<int> count(n, 0);
  for (int v = 0; v < n; ++v) ++count[color[v]];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (count[c] > 1) {
      target = c;
      break;
    }
  if (target < 0) {
    std::string s = encode(g, color);
    if (!have || s < best) {
      best = std::move(s);
      best_color = color;
      have = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (color[v] != target) continue;
    std::vector<int> child = color;
    for (int w = 0; w < n; ++w)
      if (w != v && child[w] >= target) ++child[w];
    search(g, std::move(child), best, best_color, have);
  }
}

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g) {
  std::string best;
  std::vector<int> best_color;
  bool have = false;
  search(g, std::vector<int>(g.vertex_count(), 0), best, best_color, have);
  assert(have);
  return CanonicalForm{std::move(best)};
}

std::vector<int> canonical_labeling(const SimpleGraph& g) {
  std::string best;
  std::vector<int> best_color;
  bool have = false;
  search(g, std::vector<int>(g.vertex_count(), 0), best, best_color, have);
  assert(have);
  return best_color;
}

SimpleGraph from_canonical(const CanonicalForm& f) {
  const auto& s = f.bytes;
  if (s.size() < 4) throw std::invalid_argument("canonical form too short");
  unsigned n = 0;
  for (int i = 0; i < 4; ++i) n = (n << 8) | static_cast<unsigned char>(s[i]);
  std::vector<Edge> edges;
  size_t off = 4;
  int bit = 7;
  for (int i = 0; i < static_cast<int>(n); ++i)
    for (int j = i + 1; j < static_cast<int>(n); ++j) {
      if (off >= s.size()) throw std::invalid_argument("canonical form truncated");
      if ((static_cast<unsigned char>(s[off]) >> bit) & 1) edges.push_back({i, j});
      if (--bit < 0) {
        bit = 7;
        ++off;
      }
    }
  return SimpleGraph(static_cast<int>(n), std::move(edges));
}

SimpleGraph canonical_graph(const SimpleGraph& g) { return from_canonical(canonical_form(g)); }

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::uint64_t canonical_hash(const CanonicalForm& f) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : f.bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace tg
