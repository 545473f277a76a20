#pragma once

#include <cstdint>
#include <random>

#include "tightgraph/graph.hpp"
#include "tightgraph/sparsity.hpp"

namespace tg {

// Grow a pseudo-random (2,l)-tight graph with exactly n_target vertices by
// applying legal forward moves from a base graph (joining two recursively
// built halves now and then for l = 1). Deterministic for a given seed
// across platforms: all bounded draws avoid std distributions.
SimpleGraph random_tight_graph(int n_target, SparsityParams p, std::mt19937_64& rng);

// Uniform-ish integer in [0, bound); bound >= 1.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace tg
