#include "dlspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>

#include "dlspec/spectral.hpp"

namespace dlspec {

namespace {

constexpr int kMax = kMaxCanonicalOrder;
using Perm = std::array<Vertex, kMax>;

// Ordered partition of the vertex set: `lab` lists the vertices cell by
// cell, bit k of `starts` marks position k as the first of a cell.
struct Partition {
  Perm lab{};
  std::uint32_t starts = 0;
};

class CanonicalSearch {
 public:
  CanonicalSearch(std::span<const std::uint16_t> rows) : rows_(rows), n_(static_cast<int>(rows.size())) {}

  CanonicalKey run(Perm& best_position) {
    Partition p;
    std::iota(p.lab.begin(), p.lab.begin() + n_, 0);
    p.starts = 1U;
    Perm prefix{};
    search(p, prefix, 0);
    best_position = best_pos_;
    return best_;
  }

 private:
  [[nodiscard]] int cell_end(const Partition& p, int start) const {
    int e = start + 1;
    while (e < n_ && !((p.starts >> e) & 1U)) ++e;
    return e;
  }

  // Splits cells by neighbour counts into each cell until the partition is
  // equitable. New cells are ordered by ascending count.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int ws = 0; ws < n_ && !changed; ws = cell_end(p, ws)) {
        const int we = cell_end(p, ws);
        std::uint16_t wmask = 0;
        for (int k = ws; k < we; ++k) wmask |= static_cast<std::uint16_t>(1U << p.lab[k]);
        for (int xs = 0; xs < n_; xs = cell_end(p, xs)) {
          const int xe = cell_end(p, xs);
          if (xe - xs < 2) continue;
          std::array<std::pair<int, Vertex>, kMax> keyed{};
          bool uniform = true;
          for (int k = xs; k < xe; ++k) {
            keyed[k - xs] = {std::popcount(static_cast<unsigned>(rows_[p.lab[k]] & wmask)), p.lab[k]};
            if (keyed[k - xs].first != keyed[0].first) uniform = false;
          }
          if (uniform) continue;
          std::sort(keyed.begin(), keyed.begin() + (xe - xs));
          for (int k = xs; k < xe; ++k) {
            p.lab[k] = keyed[k - xs].second;
            if (k > xs && keyed[k - xs].first != keyed[k - xs - 1].first) p.starts |= 1U << k;
          }
          changed = true;
        }
      }
    }
  }

  [[nodiscard]] CanonicalKey encode(const Perm& pos) const {
    Perm inv{};
    for (int v = 0; v < n_; ++v) inv[pos[v]] = v;
    CanonicalKey key = 0;
    for (int j = 1; j < n_; ++j) {
      const auto row = rows_[inv[j]];
      for (int i = 0; i < j; ++i) key = (key << 1) | ((row >> inv[i]) & 1U);
    }
    return key;
  }

  void record_automorphism(const Perm& reference, const Perm& pos) {
    Perm inv{};
    for (int v = 0; v < n_; ++v) inv[reference[v]] = v;
    Perm gamma{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gamma[v] = inv[pos[v]];
      if (gamma[v] != v) identity = false;
    }
    if (!identity) generators_.push_back(gamma);
  }

  void leaf(const Partition& p) {
    Perm pos{};
    for (int k = 0; k < n_; ++k) pos[p.lab[k]] = k;
    const CanonicalKey key = encode(pos);
    if (!have_first_) {
      have_first_ = true;
      first_ = best_ = key;
      first_pos_ = best_pos_ = pos;
      return;
    }
    if (key == first_) {
      record_automorphism(first_pos_, pos);
    } else if (key == best_) {
      record_automorphism(best_pos_, pos);
    }
    if (key > best_) {
      best_ = key;
      best_pos_ = pos;
    }
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // individualized prefix pointwise.
  [[nodiscard]] Perm stabilizer_orbits(const Perm& prefix, int depth) const {
    Perm root{};
    std::iota(root.begin(), root.begin() + n_, 0);
    auto find = [&](Vertex v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int d = 0; d < depth && fixes; ++d) fixes = gamma[prefix[d]] == prefix[d];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(gamma[v]);
        if (a != b) root[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) root[v] = find(v);
    return root;
  }

  void search(Partition p, Perm& prefix, int depth) {
    refine(p);
    if (std::popcount(p.starts) == n_) {
      leaf(p);
      return;
    }
    int ts = 0;
    while (cell_end(p, ts) - ts < 2) ts = cell_end(p, ts);
    const int te = cell_end(p, ts);

    std::array<Vertex, kMax> candidates{};
    std::copy(p.lab.begin() + ts, p.lab.begin() + te, candidates.begin());
    std::sort(candidates.begin(), candidates.begin() + (te - ts));

    std::array<Vertex, kMax> explored{};
    int n_explored = 0;
    for (int c = 0; c < te - ts; ++c) {
      const Vertex v = candidates[c];
      if (n_explored > 0) {
        const auto orbit = stabilizer_orbits(prefix, depth);
        bool redundant = false;
        for (int e = 0; e < n_explored && !redundant; ++e) redundant = orbit[explored[e]] == orbit[v];
        if (redundant) continue;
      }
      Partition child = p;
      const int k = static_cast<int>(std::find(child.lab.begin() + ts, child.lab.begin() + te, v) - child.lab.begin());
      std::swap(child.lab[ts], child.lab[k]);
      child.starts |= 1U << (ts + 1);
      prefix[depth] = v;
      search(child, prefix, depth + 1);
      explored[n_explored++] = v;
    }
  }

  std::span<const std::uint16_t> rows_;
  int n_;
  bool have_first_ = false;
  CanonicalKey first_ = 0;
  CanonicalKey best_ = 0;
  Perm first_pos_{};
  Perm best_pos_{};
  std::vector<Perm> generators_;
};

std::vector<std::uint16_t> small_rows(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw OrderRangeError("canonical labeling supports order <= " + std::to_string(kMaxCanonicalOrder) + ", got " +
                          std::to_string(g.order()));
  }
  const auto rows = g.adjacency_rows();
  return {rows.begin(), rows.end()};
}

}  // namespace

CanonicalKey canonical_key(std::span<const std::uint16_t> rows, std::vector<Vertex>* position) {
  if (rows.empty() || rows.size() > static_cast<std::size_t>(kMaxCanonicalOrder)) {
    throw OrderRangeError("canonical labeling supports order 1.." + std::to_string(kMaxCanonicalOrder));
  }
  CanonicalSearch search(rows);
  Perm best{};
  const auto key = search.run(best);
  if (position != nullptr) position->assign(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(rows.size()));
  return key;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  const auto rows = small_rows(g);
  std::vector<Vertex> position;
  canonical_key(rows, &position);
  Graph relabeled = g.relabeled(position);
  return {std::move(position), std::move(relabeled)};
}

CanonicalForm canonical_form(const Graph& g) { return {to_graph6(canonical_labeling(g).graph)}; }

Graph canonical_graph(const Graph& g) { return canonical_labeling(g).graph; }

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  auto d1 = g1.degrees();
  auto d2 = g2.degrees();
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return false;
  const auto s1 = symmetric_eigenvalues(laplacian(g1));
  const auto s2 = symmetric_eigenvalues(laplacian(g2));
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (std::abs(s1[i] - s2[i]) > 1e-6 * std::max(1.0, std::abs(s1[i]))) return false;
  }
  return canonical_form(g1) == canonical_form(g2);
}

}  // namespace dlspec
