#include "tightgraph/graph6.hpp"

namespace tg {

namespace {
constexpr int kBias = 63;    // printable range starts at '?'
constexpr int kMax = 126;    // '~'

int data_byte(std::string_view s, size_t off) {
  if (off >= s.size()) throw Graph6Error("truncated graph6 record", s.size());
  unsigned char c = static_cast<unsigned char>(s[off]);
  if (c < kBias || c > kMax) throw Graph6Error("invalid graph6 byte", off);
  return c - kBias;
}
}  // namespace

SimpleGraph read_graph6(std::string_view text) {
  size_t off = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (!text.empty() && text[0] == '>') {
    if (text.substr(0, header.size()) != header) throw Graph6Error("malformed header", 0);
    off = header.size();
  }
  if (off >= text.size()) throw Graph6Error("empty graph6 record", off);

  long long n = 0;
  int first = data_byte(text, off);
  if (first < 63) {
    n = first;
    ++off;
  } else {
    // '~' escape: 3 six-bit groups, or '~~' escape: 6 groups
    ++off;
    int groups = 3;
    if (off < text.size() && text[off] == '~') {
      ++off;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | data_byte(text, off + i);
    off += groups;
  }
  if (n > 1'000'000) throw Graph6Error("vertex count too large", 0);

  std::vector<Edge> edges;
  int bit = -1;
  int current = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (bit < 0) {
        current = data_byte(text, off);
        ++off;
        bit = 5;
      }
      if ((current >> bit) & 1) edges.push_back({u, v});
      --bit;
    }
  }
  if (bit >= 0 && (current & ((1 << (bit + 1)) - 1)) != 0)
    throw Graph6Error("nonzero padding bits", off - 1);
  if (off != text.size()) throw Graph6Error("trailing data after graph6 record", off);
  return SimpleGraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const SimpleGraph& g) {
  std::string out;
  const long long n = g.vertex_count();
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(kBias + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kBias + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kBias + (n & 63)));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(kBias + ((n >> shift) & 63)));
  }
  int bit = 5;
  int current = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (g.adjacent(u, v)) current |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(kBias + current));
        current = 0;
        bit = 5;
      }
    }
  }
  if (bit != 5) out.push_back(static_cast<char>(kBias + current));
  return out;
}

}  // namespace tg
