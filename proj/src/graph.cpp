#include "linesym/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace linesym {

Graph Graph::build(int n, std::span<const Edge> edges, std::string name) {
  if (n <= 0) throw std::invalid_argument("graph must have at least one vertex");

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  Graph g;
  g.n_ = n;
  g.name_ = std::move(name);
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : normalized) {
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.nbrs_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : normalized) {
    g.nbrs_[fill[u]++] = v;
    g.nbrs_[fill[v]++] = u;
  }
  for (int v = 0; v < n; ++v)
    std::sort(g.nbrs_.begin() + g.offsets_[v], g.nbrs_.begin() + g.offsets_[v + 1]);
  return g;
}

Graph Graph::build(int n, std::initializer_list<Edge> edges, std::string name) {
  return build(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(n_ - 1));
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {nbrs_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return static_cast<int>(offsets_[v + 1] - offsets_[v]);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto row = neighbors(u);
  check_vertex(v);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (int u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

VertexSet neighbors(const Graph& g, Vertex v) {
  auto row = g.neighbors(v);
  return {row.begin(), row.end()};
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Vertex v = subset[i];
    if (v < 0 || v >= g.order())
      throw std::out_of_range("vertex " + std::to_string(v) + " not in graph");
    if (position[v] != -1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " repeated in subset");
    position[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i)
    for (Vertex w : g.neighbors(subset[i]))
      if (position[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), position[w]);
  return Graph::build(static_cast<int>(subset.size()), edges);
}

std::optional<int> is_regular(const Graph& g) {
  int k = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != k) return std::nullopt;
  return k;
}

bool is_complete(const Graph& g) {
  auto n = static_cast<std::size_t>(g.order());
  return g.size() == n * (n - 1) / 2;
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push(w);
      }
  }
  return reached == g.order();
}

}  // namespace linesym
