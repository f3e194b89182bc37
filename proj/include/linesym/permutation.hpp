#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linesym/graph.hpp"

namespace linesym {

/// Bijection of 0..n-1 stored as an image array.
///
/// Permutations act on the right: `p * q` applies p first, then q, so that
/// for tuples a^(pq) = (a^p)^q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(int degree);

  /// Parses one-line notation: whitespace or comma separated images, e.g. "1 2 0 3".
  static Permutation parse(std::string_view text);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  Vertex operator()(Vertex v) const { return images_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  std::string one_line() const;

  friend Permutation operator*(const Permutation& first, const Permutation& then);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

/// Image of a tuple under p, entry by entry.
std::vector<int> apply(const Permutation& p, std::span<const int> tuple);

bool is_automorphism(const Graph& g, const Permutation& p);

}  // namespace linesym
