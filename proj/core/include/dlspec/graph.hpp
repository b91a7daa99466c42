#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dlspec/errors.hpp"

namespace dlspec {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

/// Largest order representable by the single-byte graph6 header.
inline constexpr int kMaxOrder = 62;

/// Simple undirected graph on vertices 0..n-1.
///
/// The adjacency relation is stored as a packed upper triangle in graph6
/// column-major order: the pair (i, j) with i < j lives at bit j(j-1)/2 + i.
/// Values are immutable once built; the mutating helpers return new graphs.
class Graph {
 public:
  /// Edgeless graph of the given order (1..kMaxOrder).
  explicit Graph(int order);
  Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges);
  Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  [[nodiscard]] int order() const noexcept { return order_; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept;
  [[nodiscard]] std::size_t edge_count() const noexcept;
  [[nodiscard]] int degree(Vertex v) const noexcept;
  [[nodiscard]] std::vector<int> degrees() const;
  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edges() const;

  /// Neighbourhood of v as a bitmask over vertices (bit u set iff u ~ v).
  [[nodiscard]] std::uint64_t neighbor_mask(Vertex v) const noexcept;
  [[nodiscard]] std::vector<std::uint64_t> adjacency_rows() const;

  [[nodiscard]] Graph with_edge(Vertex u, Vertex v) const;
  [[nodiscard]] Graph without_edge(Vertex u, Vertex v) const;

  /// Relabels vertex v to position[v]; position must be a permutation.
  [[nodiscard]] Graph relabeled(std::span<const Vertex> position) const;

  static Graph from_rows(std::span<const std::uint64_t> rows);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t pair_index(Vertex u, Vertex v) noexcept;
  void set(Vertex u, Vertex v, bool on) noexcept;
  void check_vertex(Vertex v) const;

  int order_;
  std::vector<std::uint64_t> bits_;
};

/// Component blocks, each sorted ascending, ordered by smallest member.
struct ComponentPartition {
  std::vector<VertexSet> blocks;

  [[nodiscard]] std::size_t count() const noexcept { return blocks.size(); }
  /// Block sizes in descending order.
  [[nodiscard]] std::vector<int> sizes() const;
};

Graph complement(const Graph& g);
/// Vertices of gs[k] are shifted past the vertices of gs[0..k-1].
Graph disjoint_union(std::span<const Graph> gs);
Graph disjoint_union(std::initializer_list<Graph> gs);
Graph join(const Graph& g1, const Graph& g2);

ComponentPartition components(const Graph& g);
bool is_connected(const Graph& g);

/// Subgraph induced on `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace dlspec
