#pragma once

// Reference implementations used only by tests. Each one takes a different
// route from the library code it checks: Floyd-Warshall instead of BFS,
// permutation search instead of partition refinement, Eigen's QR-based
// solver instead of Jacobi, rational Gaussian elimination instead of Bareiss.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dlspec/graph.hpp"
#include "dlspec/spectral.hpp"

namespace oracle {

using dlspec::Graph;

/// All-pairs distances, -1 where unreachable.
inline std::vector<std::vector<int>> floyd_distances(const Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j)
      if (g.adjacent(i, j)) d[i][j] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Largest upper-triangle bit string over all vertex permutations (n <= 9).
inline std::uint64_t brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  do {
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
    best = std::max(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && brute_canonical(a) == brute_canonical(b);
}

/// Descending eigenvalues from Eigen's self-adjoint solver.
inline std::vector<double> eigen_eigenvalues(const dlspec::SymmetricIntMatrix& m) {
  const int n = m.size();
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = static_cast<double>(m(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// Rank of (m - shift I) by Gaussian elimination over exact rationals.
inline int rational_rank(const dlspec::SymmetricIntMatrix& m, std::int64_t shift = 0) {
  using Q = boost::multiprecision::cpp_rational;
  const int n = m.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Q(m(i, j) - (i == j ? shift : 0));
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Q f = a[r][col] / a[rank][col];
      for (int c = col; c < n; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
  for (;;) {
    Graph g = random_graph(rng, n, p);
    if (dlspec::is_connected(g)) return g;
  }
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Isomorphism classes of connected labeled graphs on n vertices, found by
/// running over all 2^(n(n-1)/2) edge sets (n <= 6).
inline std::set<std::uint64_t> labeled_connected_classes(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) slots.emplace_back(i, j);
  std::set<std::uint64_t> classes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < pairs; ++k)
      if ((mask >> k) & 1U) edges.push_back(slots[k]);
    Graph g(n, edges);
    if (dlspec::is_connected(g)) classes.insert(brute_canonical(g));
  }
  return classes;
}

}  // namespace oracle
