#include "linesym/graph6.hpp"

#include <cstdint>
#include <vector>

namespace linesym {

namespace {

constexpr int kOffset = 63;
constexpr std::uint64_t kMaxOrder = 68719476735ULL;  // 2^36 - 1

void encode_order(std::uint64_t n, std::string& out) {
  if (n <= 62) {
    out += static_cast<char>(n + kOffset);
  } else if (n <= 258047) {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kOffset);
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + kOffset);
  }
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) throw Graph6Error("graph6 byte outside 63..126");
  return v;
}

}  // namespace

std::string emit_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  encode_order(n, out);
  int bits = 0, acc = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(acc + kOffset);
        bits = acc = 0;
      }
    }
  if (bits > 0) out += static_cast<char>((acc << (6 - bits)) + kOffset);
  return out;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with("\r\n"))
    text.remove_suffix(2);
  else if (text.ends_with('\n'))
    text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("malformed header: empty record");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](int count) {
    if (pos + static_cast<std::size_t>(count) > text.size())
      throw Graph6Error("malformed header: truncated order field");
    std::uint64_t v = 0;
    for (int k = 0; k < count; ++k) v = (v << 6) | static_cast<std::uint64_t>(sextet(text[pos++]));
    return v;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] != '~') {
    ++pos;
    n = take(3);
    if (n <= 62) throw Graph6Error("malformed header: non-minimal order field");
  } else {
    pos += 2;
    n = take(6);
    if (n <= 258047) throw Graph6Error("malformed header: non-minimal order field");
  }
  if (n == 0) throw Graph6Error("malformed header: graph with no vertices");
  if (n > kMaxOrder || n > 1'000'000) throw Graph6Error("graph6 order too large");

  const std::uint64_t pairs = n * (n - 1) / 2;
  const std::uint64_t body_bytes = (pairs + 5) / 6;
  const std::uint64_t available = text.size() - pos;
  if (available < body_bytes)
    throw Graph6Error("bit-length mismatch: expected " + std::to_string(body_bytes) +
                      " body bytes, found " + std::to_string(available));
  if (available > body_bytes) throw Graph6Error("trailing garbage after graph6 body");

  std::vector<Edge> edges;
  std::uint64_t index = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++index) {
      int byte = sextet(text[pos + index / 6]);
      if ((byte >> (5 - index % 6)) & 1) edges.emplace_back(i, j);
    }
  if (index % 6 != 0) {
    int last = sextet(text[pos + index / 6]);
    int pad_mask = (1 << (6 - index % 6)) - 1;
    if (last & pad_mask) throw Graph6Error("bit-length mismatch: nonzero padding bits");
  }
  return Graph::build(static_cast<int>(n), edges);
}

}  // namespace linesym
