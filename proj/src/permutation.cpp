#include "linesym/permutation.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace linesym {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (Vertex v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || hit[v])
      throw std::invalid_argument("image array is not a permutation of 0.." +
                                  std::to_string(images_.size() - 1));
    hit[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<Vertex> images;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == ',' || c == '\t' || c == '[' || c == ']' || c == '\n') {
      ++i;
      continue;
    }
    Vertex v = 0;
    auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc{})
      throw std::invalid_argument("bad permutation text: '" + std::string(text) + "'");
    images.push_back(v);
    i = static_cast<std::size_t>(end - text.data());
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<Vertex>(i)) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation q;
  q.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) q.images_[images_[i]] = static_cast<Vertex>(i);
  return q;
}

std::string Permutation::one_line() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation operator*(const Permutation& first, const Permutation& then) {
  if (first.degree() != then.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation r;
  r.images_.resize(first.images_.size());
  for (std::size_t i = 0; i < first.images_.size(); ++i) r.images_[i] = then.images_[first.images_[i]];
  return r;
}

std::vector<int> apply(const Permutation& p, std::span<const int> tuple) {
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = p(tuple[i]);
  return out;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

}  // namespace linesym
