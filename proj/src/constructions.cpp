#include "linesym/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace linesym {

EdgeIndex::EdgeIndex(Graph host) : host_(std::move(host)), edges_(host_.edges()) {}

int EdgeIndex::rank(Vertex u, Vertex v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key)
    throw std::invalid_argument("{" + std::to_string(u) + "," + std::to_string(v) +
                                "} is not an edge");
  return static_cast<int>(it - edges_.begin());
}

bool EdgeIndex::contains(Vertex u, Vertex v) const {
  Edge key{std::min(u, v), std::max(u, v)};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

LineGraph line_graph(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("line graph of an edgeless graph");
  EdgeIndex index(g);
  std::vector<Edge> adjacency;
  // Edges through a common vertex form a clique in L(g).
  for (Vertex v = 0; v < g.order(); ++v) {
    auto row = g.neighbors(v);
    std::vector<int> incident;
    for (Vertex w : row) incident.push_back(index.rank(v, w));
    for (std::size_t i = 0; i < incident.size(); ++i)
      for (std::size_t j = i + 1; j < incident.size(); ++j)
        adjacency.emplace_back(incident[i], incident[j]);
  }
  std::string name = g.name().empty() ? std::string{} : "line(" + g.name() + ")";
  Graph lg = Graph::build(static_cast<int>(index.size()), adjacency, std::move(name));
  return {std::move(lg), std::move(index)};
}

SubdivisionGraph subdivision_graph(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("subdivision of an edgeless graph");
  EdgeIndex index(g);
  const int n = g.order();
  std::vector<Edge> adjacency;
  for (std::size_t r = 0; r < index.size(); ++r) {
    auto [u, v] = index.edges()[r];
    adjacency.emplace_back(u, n + static_cast<int>(r));
    adjacency.emplace_back(v, n + static_cast<int>(r));
  }
  std::string name = g.name().empty() ? std::string{} : "subdivision(" + g.name() + ")";
  Graph sg = Graph::build(n + static_cast<int>(index.size()), adjacency, std::move(name));
  return {std::move(sg), std::move(index)};
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet& current, VertexSet candidates, VertexSet excluded,
                   std::vector<VertexSet>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) {
      VertexSet clique = current;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
    }
    return;
  }
  // Pivot on the vertex of P ∪ X with most neighbors in P.
  Vertex pivot = -1;
  std::size_t best = 0;
  auto count_in = [&](Vertex u) {
    std::size_t c = 0;
    for (Vertex w : candidates)
      if (g.adjacent(u, w)) ++c;
    return c;
  };
  for (const VertexSet* pool : {&candidates, &excluded})
    for (Vertex u : *pool) {
      std::size_t c = count_in(u);
      if (pivot < 0 || c > best) {
        pivot = u;
        best = c;
      }
    }
  VertexSet branch;
  for (Vertex v : candidates)
    if (!g.adjacent(pivot, v)) branch.push_back(v);
  for (Vertex v : branch) {
    VertexSet next_p, next_x;
    for (Vertex w : candidates)
      if (g.adjacent(v, w)) next_p.push_back(w);
    for (Vertex w : excluded)
      if (g.adjacent(v, w)) next_x.push_back(w);
    current.push_back(v);
    bron_kerbosch(g, current, std::move(next_p), std::move(next_x), out);
    current.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.insert(std::upper_bound(excluded.begin(), excluded.end(), v), v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet current;
  VertexSet all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  bron_kerbosch(g, current, std::move(all), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

CliqueGraph clique_graph(const Graph& g) {
  std::vector<VertexSet> cliques = maximal_cliques(g);
  std::size_t top = 0;
  for (const auto& c : cliques) top = std::max(top, c.size());
  std::erase_if(cliques, [top](const VertexSet& c) { return c.size() != top; });

  std::vector<Edge> adjacency;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      VertexSet common;
      std::set_intersection(cliques[i].begin(), cliques[i].end(), cliques[j].begin(),
                            cliques[j].end(), std::back_inserter(common));
      if (!common.empty()) adjacency.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  std::string name = g.name().empty() ? std::string{} : "clique(" + g.name() + ")";
  Graph cg = Graph::build(static_cast<int>(cliques.size()), adjacency, std::move(name));
  return {std::move(cg), std::move(cliques)};
}

}  // namespace linesym
