#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linesym/graph.hpp"

namespace linesym {

/// Hop distances from every vertex; -1 marks unreachable pairs.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  int order() const noexcept { return n_; }
  std::optional<int> operator()(Vertex u, Vertex v) const;
  /// Raw entry, -1 when unreachable. No range check.
  int raw(Vertex u, Vertex v) const noexcept { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  /// Largest finite distance.
  int max_finite() const noexcept { return max_finite_; }
  bool connected() const noexcept { return connected_; }

 private:
  int n_;
  std::vector<int> dist_;
  int max_finite_ = 0;
  bool connected_ = true;
};

std::optional<int> distance(const Graph& g, Vertex u, Vertex v);
std::optional<int> diameter(const Graph& g);
/// Shortest cycle length; absent for forests.
std::optional<int> girth(const Graph& g);
/// Γ_0(u), Γ_1(u), ... each sorted.
std::vector<VertexSet> distance_partition(const Graph& g, Vertex u);

/// Shape of an induced neighborhood [Γ(u)].
struct LocalType {
  enum class Kind { cycle, disjoint_cliques, other };
  Kind kind = Kind::other;
  int cycle_length = 0;  // kind == cycle
  int components = 0;    // kind == disjoint_cliques: m
  int clique_size = 0;   // kind == disjoint_cliques: r
  /// The induced neighborhood; absent for an isolated vertex.
  std::optional<Graph> witness;

  /// "cycle(5)", "disjoint_cliques(2,2)" or "other".
  std::string label() const;
  bool same_shape(const LocalType& other) const noexcept {
    return kind == other.kind && cycle_length == other.cycle_length &&
           components == other.components && clique_size == other.clique_size;
  }
};

struct LocalTypeReport {
  std::vector<LocalType> per_vertex;
  /// Present iff the graph is regular and every vertex has the same shape.
  std::optional<LocalType> summary;
};

/// Classifies a single graph. Complete components are checked first, so a
/// triangle is reported as disjoint_cliques(1,3).
LocalType classify_local_graph(const Graph& local);
LocalTypeReport local_type(const Graph& g);

/// True when every neighborhood induces a cycle (connected and 2-regular).
bool is_locally_cyclic(const Graph& g);

}  // namespace linesym
