#pragma once

#include <optional>
#include <span>
#include <vector>

#include "linesym/constructions.hpp"
#include "linesym/graph.hpp"
#include "linesym/group.hpp"
#include "linesym/permutation.hpp"
#include "linesym/walks.hpp"

namespace linesym {

/// Aut(g) by partition refinement and backtracking. The order is computed
/// twice (search-tree orbit product and Schreier-Sims on the generators) and
/// std::logic_error is thrown if they disagree.
AutGroup automorphisms(const Graph& g);

/// rank{u,v} -> rank{p(u),p(v)}. Throws std::invalid_argument unless p is an
/// automorphism of index.host().
Permutation induced_edge_action(const EdgeIndex& index, const Permutation& p);

/// Image of `group` under the induced edge action, acting on L(host).
AutGroup induced_edge_group(const EdgeIndex& index, const AutGroup& group);

/// Throws std::invalid_argument unless every generator is an automorphism of g.
void require_subgroup_of_aut(const Graph& g, const AutGroup& group);

using Tuple = std::vector<int>;

/// Lexicographically sorted set of equal-length integer tuples.
class TupleSet {
 public:
  TupleSet() = default;
  explicit TupleSet(std::vector<Tuple> tuples);
  static TupleSet of(const std::vector<Walk>& walks);
  static TupleSet of(const std::vector<LineTuple>& tuples);

  std::size_t size() const noexcept { return width_ ? data_.size() / width_ : 0; }
  bool empty() const noexcept { return size() == 0; }
  std::size_t width() const noexcept { return width_; }
  std::span<const int> operator[](std::size_t i) const { return {data_.data() + i * width_, width_}; }
  std::optional<std::size_t> find(std::span<const int> tuple) const;

 private:
  std::size_t width_ = 0;
  std::vector<int> data_;
};

struct OrbitPartition {
  TupleSet universe;
  std::vector<int> orbit_id;  // per tuple, numbered by first occurrence
  int orbit_count = 0;
  std::vector<std::size_t> orbit_sizes;
};

struct TransitivityResult {
  bool transitive = true;
  OrbitPartition partition;
};

/// Orbit of a tuple by breadth-first closure under the generators, sorted.
std::vector<Tuple> orbit_of(std::span<const int> tuple, const AutGroup& group);
std::vector<Walk> orbit_of(const Walk& walk, const AutGroup& group);
std::vector<LineTuple> orbit_of(const LineTuple& tuple, const AutGroup& group);

/// Full orbit partition of an invariant tuple set. Throws std::invalid_argument
/// if a generator maps a tuple outside the set.
TransitivityResult transitive_on(const TupleSet& tuples, const AutGroup& group);
TransitivityResult transitive_on(const std::vector<Walk>& tuples, const AutGroup& group);
TransitivityResult transitive_on(const std::vector<LineTuple>& tuples, const AutGroup& group);

/// Single orbit check: BFS from the first tuple, compare orbit size with set size.
bool is_transitive(const TupleSet& tuples, const AutGroup& group);

/// Transitive on the s-arcs at this level only (true when there are none).
bool is_transitive_on_arcs(const Graph& g, int s, const AutGroup& group);
bool is_transitive_on_geodesics(const Graph& g, int s, const AutGroup& group);

/// g has an s-arc and the group is transitive on t-arcs for every 1 <= t <= s.
/// Throws std::invalid_argument for disconnected g.
bool is_s_arc_transitive(const Graph& g, int s, const AutGroup& group);

/// Transitive on i-geodesics for every 1 <= i <= s. Requires g connected and
/// 1 <= s <= diam(g).
bool is_s_geodesic_transitive(const Graph& g, int s, const AutGroup& group);

/// Transitive on ordered vertex pairs at distance t, for every 0 <= t <= diam(g).
bool is_distance_transitive(const Graph& g, const AutGroup& group);

}  // namespace linesym
