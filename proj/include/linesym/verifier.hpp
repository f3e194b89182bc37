#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "linesym/graph.hpp"
#include "linesym/group.hpp"
#include "linesym/report.hpp"

namespace linesym {

/// No s-arc transitive graph of valency at least 3 has s >= 8 (Weiss); imported, not derived.
inline constexpr int kWeissArcBound = 7;

/// s <= girth/2 + 1 in exact arithmetic (2s <= girth + 2). Forests always qualify.
bool within_half_girth(int s, std::optional<int> girth) noexcept;

/// Reason the line-graph transitivity hypotheses fail (connected, regular,
/// non-complete, valency >= 3), or nothing when they hold.
std::optional<std::string> line_theorem_hypotheses(const Graph& g);

/// Both sides of the s-arc / line-geodesic equivalence.
struct LineEquivalence {
  int s = 0;
  std::optional<int> girth;
  int line_diameter = 0;
  /// Transitive on the s-arcs of g (the level the equivalence is stated at).
  bool arcs_transitive = false;
  /// Transitive on t-arcs for every 1 <= t <= s.
  bool arcs_transitive_all_levels = false;
  bool girth_bound = false;
  /// Induced edge action transitive on the (s-1)-geodesics of L(g).
  bool line_geodesics_transitive = false;
  std::uint64_t arc_count = 0;
  std::size_t line_geodesic_count = 0;

  bool lhs() const noexcept { return arcs_transitive; }
  bool rhs() const noexcept { return girth_bound && line_geodesics_transitive; }
};

/// Computes both sides without the hypothesis gate. Throws std::invalid_argument
/// unless g is connected and 2 <= s <= diam(L(g)) + 1, or if `group` is not a
/// subgroup of Aut(g).
LineEquivalence evaluate_line_equivalence(const Graph& g, int s, const AutGroup& group);

VerdictReport check_line_equivalence(const Graph& g, int s, const AutGroup& group);
VerdictReport check_line_equivalence(const Graph& g, int s);

/// diam(L(g)) - diam(g) in {-1,0,1}, together with diam(S(g)) - 2 diam(g) in {0,1,2}.
VerdictReport check_diameter_lemma(const Graph& g);

struct LineMapCheckOptions {
  /// Random (group element, arc) pairs for the equivariance sub-check.
  std::size_t random_pairs = 50;
  /// Every generator is tried on every arc while arcs x generators stays below this.
  std::size_t exhaustive_limit = 200'000;
  std::uint64_t seed = 0x5eed;
};

/// Injectivity, arc image, bijectivity characterization, geodesic
/// preservation, image-versus-geodesics and equivariance of the line map.
VerdictReport check_lmap_theorem(const Graph& g, int s, const AutGroup& group,
                                 const LineMapCheckOptions& options = {});
VerdictReport check_lmap_theorem(const Graph& g, int s);

/// |Aut(g)| = |Aut(L(g))| for connected g on at least 5 vertices, each side
/// computed by its own search.
VerdictReport check_line_automorphisms(const Graph& g);

/// Connected non-complete 4-regular girth-3 graphs: 2-geodesic transitive iff
/// isomorphic to K_{3[2]} or to L(Σ) for a 3-arc transitive cubic Σ, with Σ
/// recovered as the clique graph.
VerdictReport classify_valency4_girth3(const Graph& g);

/// Connected non-complete locally cyclic graphs: 2-geodesic transitive iff
/// isomorphic to K_{3[2]} or the icosahedron.
VerdictReport check_locally_cyclic(const Graph& g);

/// When L(g) is (s-1)-geodesic transitive: 2 <= s <= 7 or s > max(7, girth/2 + 1).
VerdictReport check_weiss_flag(const Graph& g, int s);

}  // namespace linesym
