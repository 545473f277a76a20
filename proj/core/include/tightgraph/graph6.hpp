#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "tightgraph/graph.hpp"

namespace tg {

// Parse failure; byte_offset points at the offending byte of the input record.
struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& what, size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        byte_offset(offset) {}
  size_t byte_offset;
};

// One graph6 record (optional ">>graph6<<" header allowed). The whole input
// must be consumed; a trailing newline is not accepted here, strip it first.
SimpleGraph read_graph6(std::string_view text);

std::string write_graph6(const SimpleGraph& g);

}  // namespace tg
