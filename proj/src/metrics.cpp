#include "linesym/metrics.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace linesym {

namespace {

std::vector<int> bfs(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
  }
  return dist;
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order())
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
}

}  // namespace

DistanceTable::DistanceTable(const Graph& g) : n_(g.order()) {
  dist_.reserve(static_cast<std::size_t>(n_) * n_);
  for (Vertex u = 0; u < n_; ++u) {
    auto row = bfs(g, u);
    for (int d : row) {
      if (d < 0) connected_ = false;
      max_finite_ = std::max(max_finite_, d);
    }
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
}

std::optional<int> DistanceTable::operator()(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("vertex not in graph");
  int d = raw(u, v);
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  int d = bfs(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::optional<int> diameter(const Graph& g) {
  DistanceTable table(g);
  if (!table.connected()) return std::nullopt;
  return table.max_finite();
}

std::optional<int> girth(const Graph& g) {
  int best = -1;
  const int n = g.order();
  std::vector<int> dist(n), parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<Vertex> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      // Cycles closed from here have length at least 2*dist[u].
      if (best > 0 && 2 * dist[u] >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          frontier.push(w);
        } else if (w != parent[u]) {
          int length = dist[u] + dist[w] + 1;
          if (best < 0 || length < best) best = length;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<VertexSet> distance_partition(const Graph& g, Vertex u) {
  check_vertex(g, u);
  auto dist = bfs(g, u);
  int top = *std::max_element(dist.begin(), dist.end());
  std::vector<VertexSet> levels(top + 1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] >= 0) levels[dist[v]].push_back(v);
  return levels;
}

std::string LocalType::label() const {
  switch (kind) {
    case Kind::cycle:
      return "cycle(" + std::to_string(cycle_length) + ")";
    case Kind::disjoint_cliques:
      return "disjoint_cliques(" + std::to_string(components) + "," + std::to_string(clique_size) +
             ")";
    case Kind::other:
      break;
  }
  return "other";
}

LocalType classify_local_graph(const Graph& local) {
  LocalType out;
  out.witness = local;
  const int n = local.order();

  std::vector<int> component(n, -1);
  std::vector<int> sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<Vertex> stack{s};
    component[s] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (Vertex w : local.neighbors(u))
        if (component[w] < 0) {
          component[w] = id;
          stack.push_back(w);
        }
    }
  }

  const std::size_t r = static_cast<std::size_t>(sizes.front());
  bool equal_sizes = std::all_of(sizes.begin(), sizes.end(),
                                 [&](int s) { return static_cast<std::size_t>(s) == r; });
  if (equal_sizes && local.size() == sizes.size() * r * (r - 1) / 2) {
    out.kind = LocalType::Kind::disjoint_cliques;
    out.components = static_cast<int>(sizes.size());
    out.clique_size = static_cast<int>(r);
    return out;
  }
  if (sizes.size() == 1 && n >= 3 && is_regular(local) == 2) {
    out.kind = LocalType::Kind::cycle;
    out.cycle_length = n;
  }
  return out;
}

LocalTypeReport local_type(const Graph& g) {
  LocalTypeReport report;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = g.neighbors(v);
    if (row.empty()) {
      report.per_vertex.push_back(LocalType{});
      continue;
    }
    report.per_vertex.push_back(classify_local_graph(induced_subgraph(g, row)));
  }
  if (!is_regular(g)) return report;
  const LocalType& first = report.per_vertex.front();
  bool uniform = std::all_of(report.per_vertex.begin(), report.per_vertex.end(),
                             [&](const LocalType& t) { return t.same_shape(first); });
  if (uniform) report.summary = first;
  return report;
}

bool is_locally_cyclic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = g.neighbors(v);
    if (row.size() < 3) return false;
    Graph local = induced_subgraph(g, row);
    if (is_regular(local) != 2 || !is_connected(local)) return false;
  }
  return true;
}

}  // namespace linesym
