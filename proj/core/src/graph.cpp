#include "dlspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace dlspec {

namespace {

std::size_t triangle_bits(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

}  // namespace

Graph::Graph(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder) {
    throw OrderRangeError("graph order must be in [1, " + std::to_string(kMaxOrder) + "], got " +
                          std::to_string(order));
  }
  bits_.assign((triangle_bits(order) + 63) / 64, 0);
}

Graph::Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(order) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    set(u, v, true);
  }
}

Graph::Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

std::size_t Graph::pair_index(Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(v) * (v - 1) / 2 + static_cast<std::size_t>(u);
}

void Graph::set(Vertex u, Vertex v, bool on) noexcept {
  const auto k = pair_index(u, v);
  const auto bit = std::uint64_t{1} << (k % 64);
  if (on) {
    bits_[k / 64] |= bit;
  } else {
    bits_[k / 64] &= ~bit;
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept {
  if (u == v) return false;
  const auto k = pair_index(u, v);
  return (bits_[k / 64] >> (k % 64)) & 1U;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t m = 0;
  for (auto w : bits_) m += static_cast<std::size_t>(std::popcount(w));
  return m;
}

int Graph::degree(Vertex v) const noexcept { return std::popcount(neighbor_mask(v)); }

std::vector<int> Graph::degrees() const {
  std::vector<int> d(order_);
  for (Vertex v = 0; v < order_; ++v) d[v] = degree(v);
  return d;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex j = 1; j < order_; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::uint64_t Graph::neighbor_mask(Vertex v) const noexcept {
  std::uint64_t mask = 0;
  for (Vertex u = 0; u < order_; ++u)
    if (adjacent(u, v)) mask |= std::uint64_t{1} << u;
  return mask;
}

std::vector<std::uint64_t> Graph::adjacency_rows() const {
  std::vector<std::uint64_t> rows(order_, 0);
  for (Vertex j = 1; j < order_; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (adjacent(i, j)) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  }
  return rows;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.set(u, v, true);
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Graph g = *this;
  if (u != v) g.set(u, v, false);
  return g;
}

Graph Graph::relabeled(std::span<const Vertex> position) const {
  if (position.size() != static_cast<std::size_t>(order_)) {
    throw DomainError("relabeling has wrong length");
  }
  std::vector<bool> seen(order_, false);
  for (auto p : position) {
    if (p < 0 || p >= order_ || seen[p]) throw DomainError("relabeling is not a permutation");
    seen[p] = true;
  }
  Graph g(order_);
  for (Vertex j = 1; j < order_; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (adjacent(i, j)) g.set(position[i], position[j], true);
  return g;
}

Graph Graph::from_rows(std::span<const std::uint64_t> rows) {
  Graph g(static_cast<int>(rows.size()));
  for (Vertex j = 1; j < g.order_; ++j)
    for (Vertex i = 0; i < j; ++i)
      if ((rows[j] >> i) & 1U) g.set(i, j, true);
  return g;
}

std::vector<int> ComponentPartition::sizes() const {
  std::vector<int> s;
  s.reserve(blocks.size());
  for (const auto& b : blocks) s.push_back(static_cast<int>(b.size()));
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (!g.adjacent(i, j)) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph disjoint_union(std::span<const Graph> gs) {
  if (gs.empty()) throw DomainError("disjoint_union of an empty list");
  int n = 0;
  for (const auto& g : gs) n += g.order();
  if (n > kMaxOrder) throw OrderRangeError("disjoint union exceeds maximum order");
  std::vector<std::pair<Vertex, Vertex>> e;
  int offset = 0;
  for (const auto& g : gs) {
    for (auto [u, v] : g.edges()) e.emplace_back(u + offset, v + offset);
    offset += g.order();
  }
  return Graph(n, e);
}

Graph disjoint_union(std::initializer_list<Graph> gs) {
  return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n = n1 + g2.order();
  if (n > kMaxOrder) throw OrderRangeError("join exceeds maximum order");
  std::vector<std::pair<Vertex, Vertex>> e = g1.edges();
  for (auto [u, v] : g2.edges()) e.emplace_back(u + n1, v + n1);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = n1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

ComponentPartition components(const Graph& g) {
  const auto rows = g.adjacency_rows();
  const int n = g.order();
  std::uint64_t unseen = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  ComponentPartition part;
  while (unseen != 0) {
    const int root = std::countr_zero(unseen);
    std::uint64_t block = std::uint64_t{1} << root;
    std::uint64_t frontier = block;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (auto f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
      frontier = next & ~block;
      block |= frontier;
    }
    unseen &= ~block;
    VertexSet members;
    for (auto b = block; b != 0; b &= b - 1) members.push_back(std::countr_zero(b));
    part.blocks.push_back(std::move(members));
  }
  return part;
}

bool is_connected(const Graph& g) { return components(g).count() == 1; }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (std::size_t j = 1; j < vertices.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (g.adjacent(vertices[i], vertices[j])) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(static_cast<int>(vertices.size()), e);
}

// graph6: header byte 63+n, then the upper triangle (column-major) packed
// big-endian into 6-bit groups, zero-padded, each group offset by 63.
Graph from_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string");
  const auto header = static_cast<unsigned char>(text.front());
  if (header == '~') throw ParseError("long-form graph6 header (order > 62) is not supported");
  if (header < 63 || header > 126) throw ParseError("graph6 header byte out of range");
  const int n = header - 63;
  if (n < 1) throw ParseError("graph6 encodes an empty vertex set");

  const std::size_t nbits = triangle_bits(n);
  const std::size_t nbytes = (nbits + 5) / 6;
  const auto body = text.substr(1);
  if (body.size() < nbytes) throw ParseError("truncated graph6 bit stream");
  if (body.size() > nbytes) throw ParseError("trailing characters after graph6 data");

  std::vector<std::pair<Vertex, Vertex>> e;
  std::size_t k = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t b = 0; b < nbytes; ++b) {
    const auto c = static_cast<unsigned char>(body[b]);
    if (c < 63 || c > 126) throw ParseError("graph6 data byte out of range at offset " + std::to_string(b + 1));
    const unsigned group = c - 63U;
    for (int s = 5; s >= 0; --s, ++k) {
      const bool bit = (group >> s) & 1U;
      if (k >= nbits) {
        if (bit) throw ParseError("nonzero padding bits in graph6 data");
        continue;
      }
      if (bit) e.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(n, e);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(63 + n));
  unsigned group = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

}  // namespace dlspec
