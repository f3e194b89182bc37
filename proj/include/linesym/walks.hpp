#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "linesym/constructions.hpp"
#include "linesym/graph.hpp"
#include "linesym/metrics.hpp"

namespace linesym {

/// Vertex sequence (v0, ..., vs) of a host graph.
struct Walk {
  std::vector<Vertex> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  friend auto operator<=>(const Walk&, const Walk&) = default;
  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Sequence (e0, ..., e_{s-1}) of line-graph vertex ids under an EdgeIndex.
struct LineTuple {
  std::vector<int> edges;

  friend auto operator<=>(const LineTuple&, const LineTuple&) = default;
  friend bool operator==(const LineTuple&, const LineTuple&) = default;
};

/// Enumeration refuses to materialize more tuples than this.
inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;

bool is_walk(const Graph& g, std::span<const Vertex> vertices);
/// Walk with v_{j-1} != v_{j+1} throughout.
bool is_arc(const Graph& g, std::span<const Vertex> vertices);
/// Walk whose endpoints are at distance exactly its length.
bool is_geodesic(const Graph& g, const DistanceTable& dist, std::span<const Vertex> vertices);

/// Number of s-arcs, saturating at cap + 1.
std::uint64_t count_arcs(const Graph& g, int s, std::uint64_t cap = kDefaultTupleCap);

/// All s-arcs in lexicographic order. Throws std::length_error above `cap`.
std::vector<Walk> enumerate_arcs(const Graph& g, int s, std::uint64_t cap = kDefaultTupleCap);

/// All s-geodesics in lexicographic order. Throws std::invalid_argument when
/// s < 1 or s exceeds the largest finite distance (the diameter for connected g).
std::vector<Walk> enumerate_geodesics(const Graph& g, int s, std::uint64_t cap = kDefaultTupleCap);
std::vector<Walk> enumerate_geodesics(const Graph& g, const DistanceTable& dist, int s,
                                      std::uint64_t cap = kDefaultTupleCap);

/// (v0..vs) -> ({v0,v1}, ..., {v_{s-1},vs}) as edge ranks.
/// Throws std::invalid_argument unless `arc` is an s-arc of index.host() with s >= 2.
LineTuple lmap(const EdgeIndex& index, const Walk& arc);

/// Unique s-arc mapped onto the (s-1)-geodesic `e` of the line graph.
/// Throws std::invalid_argument if `e` is not a geodesic of line.graph of length >= 1.
Walk lmap_invert(const LineGraph& line, const LineTuple& e);

struct ImageComparison {
  bool equal = false;
  /// Every (s-1)-geodesic of L(g) lies in the image.
  bool contains_geodesics = false;
  std::size_t image_size = 0;
  std::size_t geodesic_count = 0;
  /// First line tuple in the symmetric difference, when not equal.
  std::optional<LineTuple> witness;
};

/// Compares the image of all s-arcs under lmap with the (s-1)-geodesics of L(g).
/// Requires g connected, s >= 2, at least one s-arc and s <= diam(L(g)) + 1.
ImageComparison image_equals_geodesics(const Graph& g, int s);

}  // namespace linesym
