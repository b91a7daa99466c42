#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dlspec/graph.hpp"

namespace dlspec {

inline constexpr int kMaxCanonicalOrder = 12;

/// Labeling-invariant representative: the graph6 string of the relabeling
/// whose upper-triangle bit string (graph6 order) is lexicographically
/// largest among the relabelings reached by the search.
struct CanonicalForm {
  std::string graph6;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  /// position[v] is the canonical label of vertex v.
  std::vector<Vertex> position;
  Graph graph;
};

CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);

/// Packed canonical bit string for graphs given as adjacency rows; the
/// enumerator's hot path. Equal keys (for equal orders) iff isomorphic.
__extension__ typedef unsigned __int128 CanonicalKey;
CanonicalKey canonical_key(std::span<const std::uint16_t> rows, std::vector<Vertex>* position = nullptr);

/// Rejects early on order, edge count, degree multiset and Laplacian
/// spectrum before comparing canonical forms.
bool is_isomorphic(const Graph& g1, const Graph& g2);

}  // namespace dlspec
