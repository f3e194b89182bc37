#include "linesym/walks.hpp"

#include <algorithm>
#include <stdexcept>

namespace linesym {

bool is_walk(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  for (Vertex v : vertices)
    if (v < 0 || v >= g.order()) return false;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
  return true;
}

bool is_arc(const Graph& g, std::span<const Vertex> vertices) {
  if (!is_walk(g, vertices)) return false;
  for (std::size_t j = 1; j + 1 < vertices.size(); ++j)
    if (vertices[j - 1] == vertices[j + 1]) return false;
  return true;
}

bool is_geodesic(const Graph& g, const DistanceTable& dist, std::span<const Vertex> vertices) {
  if (!is_walk(g, vertices)) return false;
  return dist.raw(vertices.front(), vertices.back()) == static_cast<int>(vertices.size()) - 1;
}

std::uint64_t count_arcs(const Graph& g, int s, std::uint64_t cap) {
  if (s < 1) throw std::invalid_argument("arc length must be at least 1");
  const int n = g.order();
  // Arc (u, k-th neighbor of u) has id first[u] + k.
  std::vector<std::size_t> first(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) first[u + 1] = first[u] + g.neighbors(u).size();
  const std::uint64_t limit = cap + 1;
  // extend[a] = number of ways to continue arc a by the remaining steps.
  std::vector<std::uint64_t> extend(first[n], 1), next(first[n]);
  for (int step = 1; step < s; ++step) {
    for (Vertex u = 0; u < n; ++u) {
      auto row = g.neighbors(u);
      for (std::size_t k = 0; k < row.size(); ++k) {
        Vertex v = row[k];
        auto vrow = g.neighbors(v);
        std::uint64_t total = 0;
        for (std::size_t j = 0; j < vrow.size(); ++j)
          if (vrow[j] != u) total = std::min(limit, total + extend[first[v] + j]);
        next[first[u] + k] = total;
      }
    }
    std::swap(extend, next);
  }
  std::uint64_t total = 0;
  for (auto c : extend) total = std::min(limit, total + c);
  return total;
}

namespace {

void extend_arcs(const Graph& g, std::vector<Vertex>& prefix, int remaining,
                 std::vector<Walk>& out) {
  if (remaining == 0) {
    out.push_back(Walk{prefix});
    return;
  }
  Vertex last = prefix.back();
  Vertex before = prefix.size() >= 2 ? prefix[prefix.size() - 2] : -1;
  for (Vertex w : g.neighbors(last)) {
    if (w == before) continue;
    prefix.push_back(w);
    extend_arcs(g, prefix, remaining - 1, out);
    prefix.pop_back();
  }
}

void extend_geodesics(const Graph& g, const DistanceTable& dist, std::vector<Vertex>& prefix,
                      int remaining, std::vector<Walk>& out) {
  if (remaining == 0) {
    out.push_back(Walk{prefix});
    return;
  }
  Vertex start = prefix.front();
  int step = static_cast<int>(prefix.size());
  for (Vertex w : g.neighbors(prefix.back())) {
    if (dist.raw(start, w) != step) continue;
    prefix.push_back(w);
    extend_geodesics(g, dist, prefix, remaining - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Walk> enumerate_arcs(const Graph& g, int s, std::uint64_t cap) {
  if (count_arcs(g, s, cap) > cap)
    throw std::length_error("more than " + std::to_string(cap) + " " + std::to_string(s) +
                            "-arcs");
  std::vector<Walk> out;
  std::vector<Vertex> prefix;
  for (Vertex v = 0; v < g.order(); ++v) {
    prefix.assign(1, v);
    extend_arcs(g, prefix, s, out);
  }
  return out;
}

std::vector<Walk> enumerate_geodesics(const Graph& g, int s, std::uint64_t cap) {
  return enumerate_geodesics(g, DistanceTable(g), s, cap);
}

std::vector<Walk> enumerate_geodesics(const Graph& g, const DistanceTable& dist, int s,
                                      std::uint64_t cap) {
  if (s < 1 || s > dist.max_finite())
    throw std::invalid_argument("geodesic length " + std::to_string(s) + " outside 1.." +
                                std::to_string(dist.max_finite()));
  // Geodesics are arcs, so the arc count bounds the output.
  if (count_arcs(g, s, cap) > cap) {
    std::uint64_t total = 0;
    std::vector<Walk> probe;
    for (Vertex v = 0; v < g.order() && total <= cap; ++v) {
      std::vector<Vertex> prefix{v};
      probe.clear();
      extend_geodesics(g, dist, prefix, s, probe);
      total += probe.size();
    }
    if (total > cap)
      throw std::length_error("more than " + std::to_string(cap) + " " + std::to_string(s) +
                              "-geodesics");
  }
  std::vector<Walk> out;
  std::vector<Vertex> prefix;
  for (Vertex v = 0; v < g.order(); ++v) {
    prefix.assign(1, v);
    extend_geodesics(g, dist, prefix, s, out);
  }
  return out;
}

LineTuple lmap(const EdgeIndex& index, const Walk& arc) {
  if (arc.length() < 2) throw std::invalid_argument("lmap needs an s-arc with s >= 2");
  if (!is_arc(index.host(), arc.vertices))
    throw std::invalid_argument("lmap input is not an arc of the host graph");
  LineTuple out;
  out.edges.reserve(arc.vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < arc.vertices.size(); ++i)
    out.edges.push_back(index.rank(arc.vertices[i], arc.vertices[i + 1]));
  return out;
}

Walk lmap_invert(const LineGraph& line, const LineTuple& e) {
  const auto& edges = e.edges;
  if (edges.size() < 2) throw std::invalid_argument("lmap_invert needs a line tuple of length >= 2");
  for (int id : edges)
    if (id < 0 || id >= line.graph.order())
      throw std::invalid_argument("line tuple entry outside the line graph");
  if (!is_walk(line.graph, edges))
    throw std::invalid_argument("line tuple is not a walk of the line graph");
  auto d = distance(line.graph, edges.front(), edges.back());
  if (!d || *d != static_cast<int>(edges.size()) - 1)
    throw std::invalid_argument("line tuple is not a geodesic of the line graph");

  auto shared = [&](int a, int b) {
    auto [p, q] = line.index.edge(a);
    auto [r, t] = line.index.edge(b);
    return (p == r || p == t) ? p : q;
  };
  auto other = [&](int a, Vertex v) {
    auto [p, q] = line.index.edge(a);
    return p == v ? q : p;
  };
  Walk arc;
  const std::size_t s = edges.size();
  arc.vertices.resize(s + 1);
  for (std::size_t i = 1; i < s; ++i) arc.vertices[i] = shared(edges[i - 1], edges[i]);
  arc.vertices[0] = other(edges[0], arc.vertices[1]);
  arc.vertices[s] = other(edges[s - 1], arc.vertices[s - 1]);
  return arc;
}

ImageComparison image_equals_geodesics(const Graph& g, int s) {
  if (s < 2) throw std::invalid_argument("image comparison needs s >= 2");
  if (!is_connected(g)) throw std::invalid_argument("image comparison needs a connected graph");
  if (g.size() == 0 || count_arcs(g, s) == 0)
    throw std::invalid_argument("graph has no " + std::to_string(s) + "-arc");
  LineGraph line = line_graph(g);
  DistanceTable line_dist(line.graph);
  if (s > line_dist.max_finite() + 1)
    throw std::invalid_argument("s exceeds diam(L(g)) + 1");

  std::vector<LineTuple> image;
  for (const Walk& a : enumerate_arcs(g, s)) image.push_back(lmap(line.index, a));
  std::sort(image.begin(), image.end());
  std::vector<LineTuple> geodesics;
  for (const Walk& w : enumerate_geodesics(line.graph, line_dist, s - 1))
    geodesics.push_back(LineTuple{w.vertices});

  ImageComparison out;
  out.image_size = image.size();
  out.geodesic_count = geodesics.size();
  out.contains_geodesics = std::includes(image.begin(), image.end(), geodesics.begin(), geodesics.end());
  out.equal = image == geodesics;
  if (!out.equal) {
    std::vector<LineTuple> diff;
    std::set_symmetric_difference(image.begin(), image.end(), geodesics.begin(), geodesics.end(),
                                  std::back_inserter(diff));
    out.witness = diff.front();
  }
  return out;
}

}  // namespace linesym
