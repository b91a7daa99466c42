#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dlspec/graph.hpp"

namespace dlspec {

inline constexpr int kMaxEnumerationOrder = 9;

enum class StreamSource { Generated, Corpus };

/// A materialised sequence of graphs of one order. Generated streams hold
/// canonically labeled, pairwise non-isomorphic connected graphs sorted by
/// graph6; corpus streams hold whatever the file listed, in file order.
struct GraphStream {
  StreamSource source = StreamSource::Generated;
  int order = 0;
  std::vector<Graph> graphs;
  /// Corpus path, empty for generated streams.
  std::string origin;

  [[nodiscard]] std::size_t size() const noexcept { return graphs.size(); }
  [[nodiscard]] auto begin() const noexcept { return graphs.begin(); }
  [[nodiscard]] auto end() const noexcept { return graphs.end(); }
};

/// Every graph (connected or not) of order n, one per isomorphism class,
/// canonically labeled. Built level by level: each graph of order n-1 is
/// extended by a new vertex whose degree does not exceed any other degree,
/// then the results are deduplicated by canonical form.
std::vector<Graph> enumerate_all(int n);

/// Connected graphs of order n (1..9), one per isomorphism class.
GraphStream enumerate_connected(int n);

/// Number of connected graphs of order n up to isomorphism, where tabulated
/// (n <= 11); used to check that a stream is complete.
std::optional<std::size_t> connected_graph_count(int n);

struct CorpusOptions {
  std::optional<int> expect_order;
  /// Drop graphs isomorphic to an earlier line.
  bool dedup = false;
};

/// Reads one graph6 string per line. Blank lines are skipped. Throws
/// ParseError naming the 1-based line on malformed input or order mismatch.
GraphStream stream_corpus(const std::filesystem::path& path, const CorpusOptions& options = {});

/// Writes one graph6 string per line, LF-terminated.
void write_corpus(const std::filesystem::path& path, const GraphStream& stream);

}  // namespace dlspec
