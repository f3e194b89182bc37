#pragma once

#include <optional>
#include <span>
#include <vector>

#include "linesym/graph.hpp"
#include "linesym/permutation.hpp"

namespace linesym::detail {

/// Output of the individualization/refinement automorphism search.
///
/// `base` is the leftmost path of the search tree; `orbit_lengths[i]` is the
/// orbit of base[i] under the pointwise stabilizer of base[0..i-1], so the
/// group order is their product.
struct AutomorphismSearchResult {
  std::vector<Permutation> generators;
  std::vector<Vertex> base;
  std::vector<std::size_t> orbit_lengths;
};

AutomorphismSearchResult search_automorphisms(const Graph& g);

/// Isomorphism from a to b that maps fixed_a[i] to fixed_b[i] for every i.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b,
                                                    std::span<const Vertex> fixed_a = {},
                                                    std::span<const Vertex> fixed_b = {});

/// Coarsest equitable refinement of `colors`, relabelled canonically so that
/// isomorphic inputs get corresponding colors.
std::vector<int> refine(const Graph& g, std::vector<int> colors);

}  // namespace linesym::detail
