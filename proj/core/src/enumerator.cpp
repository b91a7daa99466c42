#include "dlspec/enumerator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <unordered_set>

#include "dlspec/canonical.hpp"

namespace dlspec {

namespace {

struct KeyHash {
  std::size_t operator()(CanonicalKey k) const noexcept {
    const auto lo = static_cast<std::uint64_t>(k);
    const auto hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
  }
};

using Rows = std::array<std::uint16_t, kMaxEnumerationOrder>;

struct Level {
  int order = 0;
  std::vector<Rows> graphs;
};

Level extend(const Level& prev) {
  const int k = prev.order;
  const int n = k + 1;
  Level next{n, {}};
  std::unordered_set<CanonicalKey, KeyHash> seen;
  std::vector<Vertex> position;

  for (const auto& rows : prev.graphs) {
    std::array<int, kMaxEnumerationOrder> degree{};
    for (int v = 0; v < k; ++v) degree[v] = std::popcount(static_cast<unsigned>(rows[v]));

    for (std::uint32_t subset = 0; subset < (1U << k); ++subset) {
      // The new vertex must have minimum degree in the extended graph; every
      // graph arises this way by deleting one of its minimum-degree vertices.
      const int d = std::popcount(subset);
      bool minimal = true;
      for (int v = 0; v < k && minimal; ++v) minimal = d <= degree[v] + static_cast<int>((subset >> v) & 1U);
      if (!minimal) continue;

      Rows ext = rows;
      for (int v = 0; v < k; ++v)
        if ((subset >> v) & 1U) ext[v] |= static_cast<std::uint16_t>(1U << k);
      ext[k] = static_cast<std::uint16_t>(subset);

      const std::span<const std::uint16_t> view(ext.data(), static_cast<std::size_t>(n));
      const auto key = canonical_key(view, &position);
      if (!seen.insert(key).second) continue;

      Rows canon{};
      for (int v = 0; v < n; ++v) {
        std::uint16_t r = 0;
        for (int u = 0; u < n; ++u)
          if ((ext[v] >> u) & 1U) r |= static_cast<std::uint16_t>(1U << position[u]);
        canon[position[v]] = r;
      }
      next.graphs.push_back(canon);
    }
  }
  return next;
}

void check_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw OrderRangeError("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got " +
                          std::to_string(n));
  }
}

Graph to_graph(const Rows& rows, int n) {
  std::vector<std::uint64_t> wide(rows.begin(), rows.begin() + n);
  return Graph::from_rows(wide);
}

}  // namespace

std::vector<Graph> enumerate_all(int n) {
  check_order(n);
  Level level{1, {Rows{}}};
  while (level.order < n) level = extend(level);

  std::vector<Graph> out;
  out.reserve(level.graphs.size());
  for (const auto& rows : level.graphs) out.push_back(to_graph(rows, n));
  return out;
}

GraphStream enumerate_connected(int n) {
  GraphStream stream{StreamSource::Generated, n, {}, {}};
  std::vector<std::pair<std::string, Graph>> keyed;
  for (auto& g : enumerate_all(n)) {
    if (is_connected(g)) keyed.emplace_back(to_graph6(g), std::move(g));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  stream.graphs.reserve(keyed.size());
  for (auto& [_, g] : keyed) stream.graphs.push_back(std::move(g));
  return stream;
}

std::optional<std::size_t> connected_graph_count(int n) {
  static constexpr std::array<std::size_t, 12> kCounts = {0, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571, 1006700565};
  if (n < 1 || n >= static_cast<int>(kCounts.size())) return std::nullopt;
  return kCounts[static_cast<std::size_t>(n)];
}

GraphStream stream_corpus(const std::filesystem::path& path, const CorpusOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open corpus file " + path.string());
  GraphStream stream{StreamSource::Corpus, options.expect_order.value_or(0), {}, path.string()};
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g = [&] {
      try {
        return from_graph6(line);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), lineno);
      }
    }();
    if (options.expect_order && g.order() != *options.expect_order) {
      throw ParseError("graph has order " + std::to_string(g.order()) + ", expected " +
                           std::to_string(*options.expect_order),
                       lineno);
    }
    if (stream.order == 0) stream.order = g.order();
    if (g.order() != stream.order) {
      throw ParseError("corpus mixes orders " + std::to_string(stream.order) + " and " + std::to_string(g.order()),
                       lineno);
    }
    if (options.dedup && !seen.insert(canonical_form(g).graph6).second) continue;
    stream.graphs.push_back(std::move(g));
  }
  return stream;
}

void write_corpus(const std::filesystem::path& path, const GraphStream& stream) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write corpus file " + path.string());
  for (const auto& g : stream) out << to_graph6(g) << '\n';
}

}  // namespace dlspec
