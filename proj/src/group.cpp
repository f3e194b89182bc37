#include "linesym/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace linesym {

namespace {

bool fixes_prefix(const Permutation& p, std::span<const Vertex> points) {
  return std::all_of(points.begin(), points.end(), [&](Vertex b) { return p(b) == b; });
}

Vertex first_moved_point(const Permutation& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return -1;
}

}  // namespace

AutGroup AutGroup::trivial(int degree) { return from_generators(degree, {}); }

AutGroup AutGroup::from_generators(int degree, std::vector<Permutation> generators,
                                   std::span<const Vertex> base_hint) {
  AutGroup grp;
  grp.degree_ = degree;
  for (auto& p : generators) {
    if (p.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (p.is_identity()) continue;
    if (std::find(grp.generators_.begin(), grp.generators_.end(), p) == grp.generators_.end())
      grp.generators_.push_back(std::move(p));
  }
  grp.strong_ = grp.generators_;

  std::vector<Vertex> base;
  for (Vertex b : base_hint)
    if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
  for (const auto& s : grp.strong_)
    if (fixes_prefix(s, base)) base.push_back(first_moved_point(s));
  for (Vertex b : base) {
    Level level;
    level.base = b;
    grp.levels_.push_back(std::move(level));
  }
  for (std::size_t l = 0; l < grp.levels_.size(); ++l) grp.rebuild_level(l);

  // Deterministic Schreier-Sims: make each level complete from the bottom up,
  // dropping back down whenever a sifted Schreier generator extends the chain.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(grp.levels_.size()) - 1;
  while (i >= 0) {
    auto level_index = static_cast<std::size_t>(i);
    grp.rebuild_level(level_index);
    std::vector<Vertex> prefix;
    for (std::size_t l = 0; l < level_index; ++l) prefix.push_back(grp.levels_[l].base);
    std::optional<std::size_t> dropped_to;
    const Level& level = grp.levels_[level_index];
    for (std::size_t oi = 0; !dropped_to && oi < level.orbit.size(); ++oi) {
      Vertex b = level.orbit[oi];
      for (std::size_t si = 0; si < grp.strong_.size(); ++si) {
        const Permutation& s = grp.strong_[si];
        if (!fixes_prefix(s, prefix)) continue;
        const Permutation& ub = *level.transversal[b];
        const Permutation& ubs = *level.transversal[s(b)];
        Permutation schreier = ub * s * ubs.inverse();
        auto [residue, stopped] = grp.sift(std::move(schreier), level_index + 1);
        if (residue.is_identity()) continue;
        if (stopped == grp.levels_.size()) {
          Level fresh;
          fresh.base = first_moved_point(residue);
          grp.levels_.push_back(std::move(fresh));
        }
        grp.strong_.push_back(std::move(residue));
        dropped_to = stopped;
        break;
      }
    }
    if (dropped_to) {
      i = static_cast<std::ptrdiff_t>(*dropped_to);
    } else {
      --i;
    }
  }

  grp.order_ = 1;
  for (const auto& level : grp.levels_) {
    if (__builtin_mul_overflow(grp.order_, level.orbit.size(), &grp.order_))
      throw std::overflow_error("group order exceeds 64 bits");
  }
  return grp;
}

void AutGroup::rebuild_level(std::size_t i) {
  Level& level = levels_[i];
  std::vector<Vertex> prefix;
  for (std::size_t l = 0; l < i; ++l) prefix.push_back(levels_[l].base);
  std::vector<const Permutation*> gens;
  for (const auto& s : strong_)
    if (fixes_prefix(s, prefix)) gens.push_back(&s);

  level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  level.orbit.clear();
  level.transversal[level.base] = Permutation::identity(degree_);
  level.orbit.push_back(level.base);
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    Vertex b = level.orbit[head];
    for (const Permutation* s : gens) {
      Vertex c = (*s)(b);
      if (level.transversal[c]) continue;
      level.transversal[c] = *level.transversal[b] * *s;
      level.orbit.push_back(c);
    }
  }
}

std::pair<Permutation, std::size_t> AutGroup::sift(Permutation h, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    Vertex b = h(levels_[l].base);
    const auto& u = levels_[l].transversal[b];
    if (!u) return {std::move(h), l};
    h = h * u->inverse();
  }
  return {std::move(h), levels_.size()};
}

std::vector<Vertex> AutGroup::base() const {
  std::vector<Vertex> out;
  for (const auto& level : levels_) out.push_back(level.base);
  return out;
}

std::vector<std::size_t> AutGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.orbit.size());
  return out;
}

bool AutGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, stopped] = sift(p, 0);
  return stopped == levels_.size() && residue.is_identity();
}

std::vector<Permutation> AutGroup::elements(std::uint64_t limit) const {
  if (order_ > limit) throw std::length_error("group order exceeds enumeration limit");
  std::vector<Permutation> out{Permutation::identity(degree_)};
  // g = u_{k-1} * ... * u_0 covers every element exactly once.
  for (const auto& level : levels_) {
    std::vector<Permutation> next;
    next.reserve(out.size() * level.orbit.size());
    for (const auto& partial : out)
      for (Vertex b : level.orbit) next.push_back(*level.transversal[b] * partial);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation AutGroup::random_element(std::mt19937_64& rng) const {
  Permutation g = Permutation::identity(degree_);
  for (const auto& level : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, level.orbit.size() - 1);
    g = *level.transversal[level.orbit[pick(rng)]] * g;
  }
  return g;
}

}  // namespace linesym
