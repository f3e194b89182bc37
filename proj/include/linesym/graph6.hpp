#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "linesym/graph.hpp"

namespace linesym {

/// Error raised for malformed graph6 input.
class Graph6Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// graph6 encoding: N(n) header, then the upper triangle x(i,j), i < j,
/// column by column (j = 1..n-1, i = 0..j-1), packed six bits per byte
/// most significant first, zero padded, each byte offset by 63.
std::string emit_graph6(const Graph& g);

/// Parses one graph6 record. An optional ">>graph6<<" prefix and a single
/// trailing newline are accepted; anything else after the body is an error,
/// as are nonzero padding bits.
Graph parse_graph6(std::string_view text);

}  // namespace linesym
