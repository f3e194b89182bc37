#pragma once

// Slow reference implementations used to cross-check the library. They only
// read a graph's order and edge list and work on a dense adjacency matrix.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "linesym/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency(const linesym::Graph& g);

/// Number of automorphisms by plain backtracking over vertex images.
std::uint64_t count_automorphisms(const linesym::Graph& g);
/// Every automorphism as an image vector, sorted.
std::vector<std::vector<int>> all_automorphisms(const linesym::Graph& g);

/// Shortest cycle: for each edge, remove it and BFS between its endpoints.
std::optional<int> girth(const linesym::Graph& g);
/// Floyd-Warshall; -1 for unreachable.
std::vector<std::vector<int>> distances(const linesym::Graph& g);
std::optional<int> diameter(const linesym::Graph& g);

/// Every vertex sequence of length s+1 filtered by the definitions.
std::vector<std::vector<int>> arcs(const linesym::Graph& g, int s);
std::vector<std::vector<int>> geodesics(const linesym::Graph& g, int s);

/// Maximum cliques by subset enumeration (n <= 20).
std::vector<std::vector<int>> maximum_cliques(const linesym::Graph& g);

/// Line graph from the definition: edges adjacent iff they share an endpoint,
/// edges numbered in lexicographic order.
linesym::Graph line_graph(const linesym::Graph& g);

/// graph6 via an explicit bit string.
std::string graph6(const linesym::Graph& g);

/// Whether g contains a cycle of exactly this length.
bool has_cycle_of_length(const linesym::Graph& g, int len);

/// Connected graph on n vertices: random spanning tree plus each other pair
/// with probability p.
linesym::Graph random_connected(std::mt19937_64& rng, int n, double p);
/// Any graph on n vertices, each pair with probability p.
linesym::Graph random_graph(std::mt19937_64& rng, int n, double p);
/// Connected simple cubic graph by the pairing model with rejection.
linesym::Graph random_cubic(std::mt19937_64& rng, int n);

}  // namespace oracle
