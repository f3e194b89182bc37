#include "linesym/detail/search.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace linesym::detail {

std::vector<int> refine(const Graph& g, std::vector<int> colors) {
  const int n = g.order();
  std::vector<std::vector<int>> signature(n);
  std::vector<int> order(n);
  std::size_t cells = 0;
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[v];
      sig.clear();
      for (Vertex w : g.neighbors(v)) sig.push_back(colors[w]);
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), colors[v]);
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return signature[x] < signature[y]; });
    std::vector<int> next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    colors = std::move(next);
    auto now = static_cast<std::size_t>(rank + 1);
    if (now == cells) return colors;
    cells = now;
  }
}

namespace {

// Searches isomorphisms a -> b on the disjoint union a ⊔ b, so that both
// sides are refined together and color ids are directly comparable.
class PairSearch {
 public:
  PairSearch(const Graph& a, const Graph& b)
      : a_(a), b_(b), n_(a.order()), union_(disjoint_union(a, b)) {}

  std::optional<std::vector<Vertex>> run(std::span<const Vertex> fixed_a,
                                         std::span<const Vertex> fixed_b) const {
    std::vector<int> colors(2 * n_, 0);
    for (std::size_t i = 0; i < fixed_a.size(); ++i) {
      // Repeated prefix entries must agree on both sides.
      int& ca = colors[fixed_a[i]];
      int& cb = colors[fixed_b[i] + n_];
      int mark = static_cast<int>(i) + 1;
      if (ca != 0 || cb != 0) {
        if (ca != cb) return std::nullopt;
        continue;
      }
      ca = cb = mark;
    }
    return descend(std::move(colors));
  }

 private:
  std::optional<std::vector<Vertex>> descend(std::vector<int> colors) const {
    colors = refine(union_, std::move(colors));
    int ncolors = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<int> left(ncolors, 0), right(ncolors, 0);
    for (int v = 0; v < n_; ++v) ++left[colors[v]];
    for (int v = n_; v < 2 * n_; ++v) ++right[colors[v]];
    if (left != right) return std::nullopt;

    int target = -1;
    for (int c = 0; c < ncolors; ++c)
      if (left[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) return leaf(colors, ncolors);

    Vertex x = 0;
    while (colors[x] != target) ++x;
    for (Vertex y = n_; y < 2 * n_; ++y) {
      if (colors[y] != target) continue;
      std::vector<int> child(colors.size());
      for (std::size_t i = 0; i < colors.size(); ++i) child[i] = 2 * colors[i];
      child[x] += 1;
      child[y] += 1;
      if (auto found = descend(std::move(child))) return found;
    }
    return std::nullopt;
  }

  std::optional<std::vector<Vertex>> leaf(const std::vector<int>& colors, int ncolors) const {
    std::vector<Vertex> right_of(ncolors);
    for (int v = n_; v < 2 * n_; ++v) right_of[colors[v]] = v - n_;
    std::vector<Vertex> phi(n_);
    for (int v = 0; v < n_; ++v) phi[v] = right_of[colors[v]];
    for (auto [u, v] : a_.edges())
      if (!b_.adjacent(phi[u], phi[v])) return std::nullopt;
    return phi;
  }

  const Graph& a_;
  const Graph& b_;
  int n_;
  Graph union_;

  static Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph::build(a.order() + b.order(), edges);
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    std::span<const Vertex> fixed_a,
                                                    std::span<const Vertex> fixed_b) {
  if (fixed_a.size() != fixed_b.size())
    throw std::invalid_argument("fixed prefixes differ in length");
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  for (Vertex v : fixed_a)
    if (v < 0 || v >= a.order()) throw std::out_of_range("fixed vertex out of range");
  for (Vertex v : fixed_b)
    if (v < 0 || v >= b.order()) throw std::out_of_range("fixed vertex out of range");
  return PairSearch(a, b).run(fixed_a, fixed_b);
}

AutomorphismSearchResult search_automorphisms(const Graph& g) {
  const int n = g.order();
  PairSearch search(g, g);
  AutomorphismSearchResult result;

  // Leftmost path: individualize the first vertex of the first non-singleton
  // cell until the partition is discrete, remembering each target cell.
  std::vector<VertexSet> cells;
  std::vector<int> colors = refine(g, std::vector<int>(n, 0));
  for (;;) {
    int ncolors = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<int> count(ncolors, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < ncolors; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) break;
    VertexSet cell;
    for (int v = 0; v < n; ++v)
      if (colors[v] == target) cell.push_back(v);
    result.base.push_back(cell.front());
    cells.push_back(cell);
    for (auto& c : colors) c *= 2;
    colors[cell.front()] += 1;
    colors = refine(g, std::move(colors));
  }

  const std::size_t depth = result.base.size();
  result.orbit_lengths.assign(depth, 1);
  // Deepest level first: every generator found so far fixes base[0..i-1].
  for (std::size_t i = depth; i-- > 0;) {
    auto orbit_of_base = [&] {
      std::vector<char> in(n, 0);
      std::vector<Vertex> orbit{result.base[i]};
      in[result.base[i]] = 1;
      for (std::size_t head = 0; head < orbit.size(); ++head)
        for (const auto& p : result.generators) {
          Vertex w = p(orbit[head]);
          if (!in[w]) {
            in[w] = 1;
            orbit.push_back(w);
          }
        }
      return in;
    };
    std::vector<char> in_orbit = orbit_of_base();
    std::vector<Vertex> fixed_a(result.base.begin(), result.base.begin() + i + 1);
    std::vector<Vertex> fixed_b = fixed_a;
    for (Vertex w : cells[i]) {
      if (in_orbit[w]) continue;
      fixed_b.back() = w;
      if (auto phi = search.run(fixed_a, fixed_b)) {
        result.generators.emplace_back(std::move(*phi));
        in_orbit = orbit_of_base();
      }
    }
    result.orbit_lengths[i] =
        static_cast<std::size_t>(std::count(in_orbit.begin(), in_orbit.end(), 1));
  }
  return result;
}

}  // namespace linesym::detail

namespace linesym {

std::optional<std::vector<Vertex>> isomorphic(const Graph& a, const Graph& b) {
  return detail::find_isomorphism(a, b);
}

}  // namespace linesym
