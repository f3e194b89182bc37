#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linesym {

using Vertex = int;

/// Sorted list of distinct vertex ids.
using VertexSet = std::vector<Vertex>;

/// Unordered vertex pair. Graph accessors always return it with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple undirected graph on the vertices 0..n-1.
///
/// Adjacency is stored in compressed rows with every row strictly sorted, so
/// adjacency tests are a binary search and neighbor iteration is in
/// increasing vertex order. Duplicate input edges are collapsed; self-loops
/// and out-of-range endpoints are rejected with std::invalid_argument.
class Graph {
 public:
  static Graph build(int n, std::span<const Edge> edges, std::string name = {});
  static Graph build(int n, std::initializer_list<Edge> edges, std::string name = {});

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return nbrs_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Every edge once, sorted by (min endpoint, max endpoint).
  std::vector<Edge> edges() const;

  const std::string& name() const noexcept { return name_; }
  Graph renamed(std::string name) const;

  /// Structural equality; names are ignored.
  bool operator==(const Graph& other) const noexcept {
    return n_ == other.n_ && offsets_ == other.offsets_ && nbrs_ == other.nbrs_;
  }

 private:
  Graph() = default;
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> nbrs_;
  std::string name_;
};

/// Γ(v) as a sorted vertex set.
VertexSet neighbors(const Graph& g, Vertex v);

/// Subgraph induced on `subset`. Vertex i of the result is subset[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Common degree when every vertex has the same degree.
std::optional<int> is_regular(const Graph& g);

bool is_complete(const Graph& g);
bool is_connected(const Graph& g);

/// Finds φ with {u,v} ∈ E(a) ⇔ {φu,φv} ∈ E(b); φ[u] is the image of u.
/// Uses the same refinement/backtracking kernel as the automorphism search.
std::optional<std::vector<Vertex>> isomorphic(const Graph& a, const Graph& b);

}  // namespace linesym
