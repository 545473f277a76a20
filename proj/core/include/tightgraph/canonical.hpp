#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "tightgraph/graph.hpp"

namespace tg {

// Opaque canonical label; equal byte strings <=> isomorphic graphs.
// The bytes encode the graph itself (vertex count + canonical adjacency),
// so a form can be decoded back into its representative labeling.
struct CanonicalForm {
  std::string bytes;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const SimpleGraph& g);

// vertex -> canonical position; two graphs with equal forms are isomorphic
// under pos_b^{-1} . pos_a
std::vector<int> canonical_labeling(const SimpleGraph& g);

// Representative graph carried by a form (the canonically relabeled graph).
SimpleGraph from_canonical(const CanonicalForm& f);
SimpleGraph canonical_graph(const SimpleGraph& g);

bool isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// FNV-1a over the form bytes; used for certificate node hashes.
std::uint64_t canonical_hash(const CanonicalForm& f);

}  // namespace tg

template <>
struct std::hash<tg::CanonicalForm> {
  size_t operator()(const tg::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes);
  }
};
