#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "linesym/permutation.hpp"

namespace linesym {

/// Permutation group given by generators, with a stabilizer chain.
///
/// The chain is built by deterministic Schreier-Sims. The order is the
/// product of the basic orbit lengths and is exact; std::overflow_error is
/// thrown if it does not fit in 64 bits.
class AutGroup {
 public:
  static AutGroup trivial(int degree);

  /// `base_hint` points are used first when choosing base points.
  static AutGroup from_generators(int degree, std::vector<Permutation> generators,
                                  std::span<const Vertex> base_hint = {});

  int degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  std::uint64_t order() const noexcept { return order_; }

  std::vector<Vertex> base() const;
  std::vector<std::size_t> basic_orbit_lengths() const;

  /// Membership by sifting through the chain.
  bool contains(const Permutation& p) const;

  /// Every element, ordered lexicographically by image array.
  /// Throws std::length_error when order() exceeds `limit`.
  std::vector<Permutation> elements(std::uint64_t limit = 1'000'000) const;

  /// Uniformly distributed element.
  Permutation random_element(std::mt19937_64& rng) const;

 private:
  struct Level {
    Vertex base = 0;
    std::vector<Vertex> orbit;
    std::vector<std::optional<Permutation>> transversal;  // indexed by point
  };

  void rebuild_level(std::size_t i);
  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const;

  int degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

}  // namespace linesym
