#include "linesym/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "linesym/detail/search.hpp"
#include "linesym/metrics.hpp"

namespace linesym {

AutGroup automorphisms(const Graph& g) {
  auto found = detail::search_automorphisms(g);
  std::uint64_t search_order = 1;
  for (auto len : found.orbit_lengths)
    if (__builtin_mul_overflow(search_order, len, &search_order))
      throw std::overflow_error("automorphism group order exceeds 64 bits");
  AutGroup group = AutGroup::from_generators(g.order(), std::move(found.generators), found.base);
  if (group.order() != search_order)
    throw std::logic_error("automorphism search and stabilizer chain disagree on |Aut|");
  return group;
}

Permutation induced_edge_action(const EdgeIndex& index, const Permutation& p) {
  if (!is_automorphism(index.host(), p))
    throw std::invalid_argument("permutation does not preserve the edge set");
  std::vector<Vertex> images(index.size());
  for (std::size_t r = 0; r < index.size(); ++r) {
    auto [u, v] = index.edges()[r];
    images[r] = index.rank(p(u), p(v));
  }
  return Permutation(std::move(images));
}

AutGroup induced_edge_group(const EdgeIndex& index, const AutGroup& group) {
  std::vector<Permutation> gens;
  for (const auto& p : group.generators()) gens.push_back(induced_edge_action(index, p));
  return AutGroup::from_generators(static_cast<int>(index.size()), std::move(gens));
}

void require_subgroup_of_aut(const Graph& g, const AutGroup& group) {
  if (group.degree() != g.order())
    throw std::invalid_argument("group degree does not match graph order");
  for (const auto& p : group.generators())
    if (!is_automorphism(g, p))
      throw std::invalid_argument("generator " + p.one_line() + " is not an automorphism");
}

TupleSet::TupleSet(std::vector<Tuple> tuples) {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  if (tuples.empty()) return;
  width_ = tuples.front().size();
  data_.reserve(tuples.size() * width_);
  for (const auto& t : tuples) {
    if (t.size() != width_) throw std::invalid_argument("tuples of different lengths");
    data_.insert(data_.end(), t.begin(), t.end());
  }
}

TupleSet TupleSet::of(const std::vector<Walk>& walks) {
  std::vector<Tuple> tuples;
  tuples.reserve(walks.size());
  for (const auto& w : walks) tuples.push_back(w.vertices);
  return TupleSet(std::move(tuples));
}

TupleSet TupleSet::of(const std::vector<LineTuple>& line_tuples) {
  std::vector<Tuple> tuples;
  tuples.reserve(line_tuples.size());
  for (const auto& t : line_tuples) tuples.push_back(t.edges);
  return TupleSet(std::move(tuples));
}

std::optional<std::size_t> TupleSet::find(std::span<const int> tuple) const {
  if (tuple.size() != width_ || empty()) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), tuple.begin(), tuple.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(tuple.begin(), tuple.end(), (*this)[lo].begin())) return lo;
  return std::nullopt;
}

namespace {

void check_in_domain(std::span<const int> tuple, const AutGroup& group) {
  for (int x : tuple)
    if (x < 0 || x >= group.degree())
      throw std::invalid_argument("tuple entry outside the group's domain");
}

std::size_t find_or_throw(const TupleSet& set, std::span<const int> tuple) {
  auto at = set.find(tuple);
  if (!at) throw std::invalid_argument("tuple set is not invariant under the group");
  return *at;
}

}  // namespace

std::vector<Tuple> orbit_of(std::span<const int> tuple, const AutGroup& group) {
  check_in_domain(tuple, group);
  std::set<Tuple> seen{Tuple(tuple.begin(), tuple.end())};
  std::vector<Tuple> queue{Tuple(tuple.begin(), tuple.end())};
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const auto& p : group.generators()) {
      Tuple image = linesym::apply(p, queue[head]);
      if (seen.insert(image).second) queue.push_back(std::move(image));
    }
  return {seen.begin(), seen.end()};
}

std::vector<Walk> orbit_of(const Walk& walk, const AutGroup& group) {
  std::vector<Walk> out;
  for (auto& t : orbit_of(std::span<const int>(walk.vertices), group)) out.push_back(Walk{std::move(t)});
  return out;
}

std::vector<LineTuple> orbit_of(const LineTuple& tuple, const AutGroup& group) {
  std::vector<LineTuple> out;
  for (auto& t : orbit_of(std::span<const int>(tuple.edges), group))
    out.push_back(LineTuple{std::move(t)});
  return out;
}

TransitivityResult transitive_on(const TupleSet& tuples, const AutGroup& group) {
  TransitivityResult result;
  result.partition.universe = tuples;
  const std::size_t count = tuples.size();
  if (count == 0) return result;
  check_in_domain(tuples[0], group);

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Tuple image(tuples.width());
  for (std::size_t i = 0; i < count; ++i) {
    auto row = tuples[i];
    for (const auto& p : group.generators()) {
      for (std::size_t k = 0; k < row.size(); ++k) image[k] = p(row[k]);
      std::size_t a = root(i), b = root(find_or_throw(tuples, image));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  auto& part = result.partition;
  part.orbit_id.assign(count, -1);
  std::vector<int> id_of_root(count, -1);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t r = root(i);
    if (id_of_root[r] < 0) {
      id_of_root[r] = part.orbit_count++;
      part.orbit_sizes.push_back(0);
    }
    part.orbit_id[i] = id_of_root[r];
    ++part.orbit_sizes[id_of_root[r]];
  }
  result.transitive = part.orbit_count == 1;
  return result;
}

TransitivityResult transitive_on(const std::vector<Walk>& tuples, const AutGroup& group) {
  return transitive_on(TupleSet::of(tuples), group);
}

TransitivityResult transitive_on(const std::vector<LineTuple>& tuples, const AutGroup& group) {
  return transitive_on(TupleSet::of(tuples), group);
}

bool is_transitive(const TupleSet& tuples, const AutGroup& group) {
  const std::size_t count = tuples.size();
  if (count <= 1) return true;
  // A transitive group has order at least the orbit length.
  if (group.order() < count) return false;
  check_in_domain(tuples[0], group);
  std::vector<char> seen(count, 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  Tuple image(tuples.width());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto row = tuples[queue[head]];
    for (const auto& p : group.generators()) {
      for (std::size_t k = 0; k < row.size(); ++k) image[k] = p(row[k]);
      std::size_t at = find_or_throw(tuples, image);
      if (!seen[at]) {
        seen[at] = 1;
        queue.push_back(at);
      }
    }
  }
  return queue.size() == count;
}

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
}

}  // namespace

bool is_transitive_on_arcs(const Graph& g, int s, const AutGroup& group) {
  require_subgroup_of_aut(g, group);
  auto count = count_arcs(g, s);
  if (count <= 1) return true;
  if (group.order() < count) return false;
  return is_transitive(TupleSet::of(enumerate_arcs(g, s)), group);
}

bool is_transitive_on_geodesics(const Graph& g, int s, const AutGroup& group) {
  require_subgroup_of_aut(g, group);
  return is_transitive(TupleSet::of(enumerate_geodesics(g, s)), group);
}

bool is_s_arc_transitive(const Graph& g, int s, const AutGroup& group) {
  require_connected(g);
  if (s < 1) throw std::invalid_argument("s must be at least 1");
  if (count_arcs(g, s) == 0) return false;
  for (int t = 1; t <= s; ++t)
    if (!is_transitive_on_arcs(g, t, group)) return false;
  return true;
}

bool is_s_geodesic_transitive(const Graph& g, int s, const AutGroup& group) {
  require_connected(g);
  DistanceTable dist(g);
  if (s < 1 || s > dist.max_finite())
    throw std::invalid_argument("s must lie in 1..diam(g)");
  require_subgroup_of_aut(g, group);
  for (int i = 1; i <= s; ++i)
    if (!is_transitive(TupleSet::of(enumerate_geodesics(g, dist, i)), group)) return false;
  return true;
}

bool is_distance_transitive(const Graph& g, const AutGroup& group) {
  require_connected(g);
  require_subgroup_of_aut(g, group);
  DistanceTable dist(g);
  for (int t = 0; t <= dist.max_finite(); ++t) {
    std::vector<Tuple> pairs;
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = 0; v < g.order(); ++v)
        if (dist.raw(u, v) == t) pairs.push_back({u, v});
    if (!is_transitive(TupleSet(std::move(pairs)), group)) return false;
  }
  return true;
}

}  // namespace linesym
