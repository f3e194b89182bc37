#include <array>
#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "linesym/constructions.hpp"

namespace linesym {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string call_name(std::string_view base, std::initializer_list<int> args) {
  std::string out(base);
  out += '(';
  bool first = true;
  for (int a : args) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + ')';
}

}  // namespace

Graph complete_graph(int n) {
  require(n >= 1, "complete(n) needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::build(n, edges, call_name("complete", {n}));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::build(n, edges, call_name("cycle", {n}));
}

Graph path_graph(int n) {
  require(n >= 1, "path(n) needs n >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges, call_name("path", {n}));
}

// Part p holds vertices p*b .. p*b + b - 1.
Graph complete_multipartite(int parts, int part_size) {
  require(parts >= 1 && part_size >= 1, "complete_multipartite(m,b) needs m, b >= 1");
  const int n = parts * part_size;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u / part_size != v / part_size) edges.emplace_back(u, v);
  return Graph::build(n, edges, call_name("complete_multipartite", {parts, part_size}));
}

// Vertices are the 2-subsets of {0..4} in lexicographic order; adjacent when disjoint.
Graph petersen_graph() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(i, j);
    }
  return Graph::build(10, edges, "petersen");
}

// Points 0..6 and lines 7..13 of the Fano plane; line i is {i, i+1, i+3} mod 7.
Graph heawood_graph() {
  std::vector<Edge> edges;
  for (int line = 0; line < 7; ++line)
    for (int offset : {0, 1, 3}) edges.emplace_back((line + offset) % 7, 7 + line);
  return Graph::build(14, edges, "heawood");
}

// Incidence graph of the generalized quadrangle W(2): points 0..14 are the
// 2-subsets of {0..5} (lexicographic), lines 15..29 are the synthemes
// (partitions of {0..5} into three pairs, lexicographic).
Graph tutte_8_cage() {
  std::vector<std::pair<int, int>> duads;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
  auto duad_id = [&](int a, int b) {
    return static_cast<int>(std::find(duads.begin(), duads.end(), std::pair{a, b}) -
                            duads.begin());
  };
  std::vector<std::array<int, 3>> synthemes;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int x = 1; x < 6; ++x)
      if (x != b) rest.push_back(x);
    for (std::size_t j = 1; j < rest.size(); ++j) {
      std::vector<int> last;
      for (std::size_t k = 1; k < rest.size(); ++k)
        if (k != j) last.push_back(rest[k]);
      synthemes.push_back({duad_id(0, b), duad_id(rest[0], rest[j]), duad_id(last[0], last[1])});
    }
  }
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < synthemes.size(); ++s)
    for (int d : synthemes[s]) edges.emplace_back(d, 15 + static_cast<int>(s));
  return Graph::build(30, edges, "tutte_8_cage");
}

// 0 = top, 1..5 upper ring, 6..10 lower ring, 11 = bottom. Upper vertex i
// meets lower vertices 5+i and 5+(i mod 5)+1.
Graph icosahedron() {
  std::vector<Edge> edges;
  for (int i = 1; i <= 5; ++i) {
    int next = i % 5 + 1;
    edges.emplace_back(0, i);
    edges.emplace_back(i, next);
    edges.emplace_back(5 + i, 5 + next);
    edges.emplace_back(11, 5 + i);
    edges.emplace_back(i, 5 + i);
    edges.emplace_back(i, 5 + next);
  }
  return Graph::build(12, edges, "icosahedron");
}

Graph k33() { return complete_multipartite(2, 3).renamed("k33"); }

// Vertices are 3-bit words; adjacent when they differ in one bit.
Graph cube_graph() {
  std::vector<Edge> edges;
  for (int v = 0; v < 8; ++v)
    for (int bit : {1, 2, 4})
      if (v < (v ^ bit)) edges.emplace_back(v, v ^ bit);
  return Graph::build(8, edges, "cube");
}

// Vertex (i, j) is i*cols + j; neighbors (i, j±1), (i±1, j), (i+1, j+1), (i-1, j-1).
Graph triangular_torus(int rows, int cols) {
  require(rows >= 3 && cols >= 3, "triangular_torus(r,c) needs r, c >= 3");
  auto id = [&](int i, int j) { return ((i + rows) % rows) * cols + (j + cols) % cols; };
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      edges.emplace_back(id(i, j), id(i, j + 1));
      edges.emplace_back(id(i, j), id(i + 1, j));
      edges.emplace_back(id(i, j), id(i + 1, j + 1));
    }
  return Graph::build(rows * cols, edges, call_name("triangular_torus", {rows, cols}));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<int> int_args(std::string_view name, std::string_view inner) {
  std::vector<int> out;
  while (!inner.empty()) {
    auto comma = inner.find(',');
    std::string_view piece = trim(inner.substr(0, comma));
    int value = 0;
    auto [end, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    require(ec == std::errc{} && end == piece.data() + piece.size() && !piece.empty(),
            "bad argument '" + std::string(piece) + "' in " + std::string(name));
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph catalog(std::string_view name) {
  name = trim(name);
  auto open = name.find('(');
  if (open == std::string_view::npos) {
    if (name == "petersen") return petersen_graph();
    if (name == "heawood") return heawood_graph();
    if (name == "tutte_8_cage") return tutte_8_cage();
    if (name == "icosahedron") return icosahedron();
    if (name == "k33") return k33();
    if (name == "cube") return cube_graph();
    throw std::invalid_argument("unknown catalog graph '" + std::string(name) + "'");
  }
  require(name.back() == ')', "unbalanced parentheses in '" + std::string(name) + "'");
  std::string_view head = trim(name.substr(0, open));
  std::string_view inner = name.substr(open + 1, name.size() - open - 2);

  if (head == "line") return line_graph(catalog(inner)).graph;
  if (head == "subdivision") return subdivision_graph(catalog(inner)).graph;
  if (head == "clique") return clique_graph(catalog(inner)).graph;

  auto args = int_args(name, inner);
  auto arity = [&](std::size_t k) {
    require(args.size() == k, std::string(head) + " takes " + std::to_string(k) + " argument(s)");
  };
  if (head == "complete") return arity(1), complete_graph(args[0]);
  if (head == "cycle") return arity(1), cycle_graph(args[0]);
  if (head == "path") return arity(1), path_graph(args[0]);
  if (head == "complete_multipartite") return arity(2), complete_multipartite(args[0], args[1]);
  if (head == "triangular_torus") return arity(2), triangular_torus(args[0], args[1]);
  throw std::invalid_argument("unknown catalog graph '" + std::string(name) + "'");
}

std::vector<std::string> catalog_names() {
  return {"complete(n)",  "cycle(n)",         "path(n)",     "complete_multipartite(m,b)",
          "petersen",     "heawood",          "tutte_8_cage", "icosahedron",
          "k33",          "cube",             "triangular_torus(r,c)",
          "line(NAME)",   "subdivision(NAME)", "clique(NAME)"};
}

}  // namespace linesym
