#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "linesym/graph.hpp"

namespace linesym {

/// Bijection between E(host) and 0..|E|-1, ordered by (min endpoint, max endpoint).
///
/// This is the identification of edges of the host with vertices of its line
/// graph, and of edge-vertices of its subdivision graph (offset by n).
class EdgeIndex {
 public:
  explicit EdgeIndex(Graph host);

  const Graph& host() const noexcept { return host_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int rank) const { return edges_.at(static_cast<std::size_t>(rank)); }

  /// Rank of {u, v}; throws std::invalid_argument if it is not an edge.
  int rank(Vertex u, Vertex v) const;
  bool contains(Vertex u, Vertex v) const;

 private:
  Graph host_;
  std::vector<Edge> edges_;
};

struct LineGraph {
  Graph graph;
  EdgeIndex index;
};

/// Vertices 0..n-1 are the host vertices; n + rank(e) is the vertex for edge e.
struct SubdivisionGraph {
  Graph graph;
  EdgeIndex index;
};

/// One vertex per maximum clique, in lexicographic order of the sorted cliques.
struct CliqueGraph {
  Graph graph;
  std::vector<VertexSet> cliques;
};

LineGraph line_graph(const Graph& g);
SubdivisionGraph subdivision_graph(const Graph& g);
CliqueGraph clique_graph(const Graph& g);

/// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Named graphs. Every numbering below is fixed; see catalog.cpp.
Graph complete_graph(int n);
Graph cycle_graph(int n);
/// Path on n vertices (n - 1 edges).
Graph path_graph(int n);
Graph complete_multipartite(int parts, int part_size);
Graph petersen_graph();
Graph heawood_graph();
Graph tutte_8_cage();
Graph icosahedron();
Graph k33();
Graph cube_graph();
/// r x c torus grid with one diagonal per square; 6-regular and locally C6 when r, c >= 4.
Graph triangular_torus(int rows, int cols);

/// Parses and builds a catalog entry. Accepted names:
///   complete(n) cycle(n) path(n) complete_multipartite(m,b) triangular_torus(r,c)
///   petersen heawood tutte_8_cage icosahedron k33 cube
///   line(NAME) subdivision(NAME) clique(NAME)
/// Throws std::invalid_argument for unknown names or bad parameters.
Graph catalog(std::string_view name);

/// Names shown by `catalog list`.
std::vector<std::string> catalog_names();

}  // namespace linesym
